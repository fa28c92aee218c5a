#include "fibdual/iso.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibdual {

FunctorData invert_functor(const FunctorData& fwd, const char* what) {
  FunctorData bwd;
  bwd.dom = fwd.cod;
  bwd.cod = fwd.dom;
  if (fwd.dom->object_count() != fwd.cod->object_count() ||
      fwd.dom->arrow_count() != fwd.cod->arrow_count()) {
    throw std::logic_error(std::string(what) + " is not a bijection (sizes)");
  }
  bwd.obj_map.assign(static_cast<std::size_t>(fwd.cod->object_count()), -1);
  bwd.arr_map.assign(static_cast<std::size_t>(fwd.cod->arrow_count()),
                     kNoArrow);
  for (ObjId x = 0; x < fwd.dom->object_count(); ++x) {
    if (bwd.obj_map[fwd.obj_map[x]] != -1) {
      throw std::logic_error(std::string(what) +
                             " is not injective on objects");
    }
    bwd.obj_map[fwd.obj_map[x]] = x;
  }
  for (ArrId f = 0; f < fwd.dom->arrow_count(); ++f) {
    if (bwd.arr_map[fwd.arr_map[f]] != kNoArrow) {
      throw std::logic_error(std::string(what) +
                             " is not injective on arrows");
    }
    bwd.arr_map[fwd.arr_map[f]] = f;
  }
  return bwd;
}

namespace {

std::size_t hom_size(const FinCategory& c, ObjId x, ObjId y) {
  std::size_t n = 0;
  for (ArrId f = 0; f < c.arrow_count(); ++f) {
    if (c.src(f) == x && c.tgt(f) == y) ++n;
  }
  return n;
}

struct IsoSearch {
  const FinCategory& a;
  const FinCategory& b;
  const FunctorData* pi_a = nullptr;
  const FunctorData* pi_b = nullptr;

  std::vector<ObjId> obj_map;
  std::vector<ArrId> arr_map;
  std::vector<bool> obj_used;
  std::vector<bool> arr_used;

  IsoSearch(const FinCategory& a_, const FinCategory& b_)
      : a(a_),
        b(b_),
        obj_map(static_cast<std::size_t>(a_.object_count()), -1),
        arr_map(static_cast<std::size_t>(a_.arrow_count()), kNoArrow),
        obj_used(static_cast<std::size_t>(b_.object_count()), false),
        arr_used(static_cast<std::size_t>(b_.arrow_count()), false) {}

  bool object_compatible(ObjId x, ObjId y) const {
    if (pi_a && pi_a->obj_map[x] != pi_b->obj_map[y]) return false;
    // Hom-set sizes against every object placed so far, both directions.
    for (ObjId z = 0; z <= x; ++z) {
      const ObjId w = (z == x) ? y : obj_map[z];
      if (hom_size(a, x, z) != hom_size(b, y, w)) return false;
      if (hom_size(a, z, x) != hom_size(b, w, y)) return false;
    }
    return true;
  }

  bool arrow_compatible(ArrId f, ArrId g) const {
    if (pi_a && pi_a->arr_map[f] != pi_b->arr_map[g]) return false;
    if (b.src(g) != obj_map[a.src(f)] || b.tgt(g) != obj_map[a.tgt(f)]) {
      return false;
    }
    if (a.is_identity(f) != b.is_identity(g)) return false;
    // Composites with every arrow placed so far must transport, whenever
    // the composite itself is already placed.
    for (ArrId e = 0; e <= f; ++e) {
      const ArrId ge = (e == f) ? g : arr_map[e];
      if (a.composable(e, f)) {
        const ArrId c = a.composite_or_none(e, f);
        if (c != kNoArrow && c <= f) {
          const ArrId want = (c == f) ? g : arr_map[c];
          if (b.composite_or_none(ge, g) != want) return false;
        }
      }
      if (a.composable(f, e)) {
        const ArrId c = a.composite_or_none(f, e);
        if (c != kNoArrow && c <= f) {
          const ArrId want = (c == f) ? g : arr_map[c];
          if (b.composite_or_none(g, ge) != want) return false;
        }
      }
    }
    return true;
  }

  bool assign_arrows(ArrId f) {
    if (f == a.arrow_count()) return true;
    for (ArrId g = 0; g < b.arrow_count(); ++g) {
      if (arr_used[g] || !arrow_compatible(f, g)) continue;
      arr_map[f] = g;
      arr_used[g] = true;
      if (assign_arrows(f + 1)) return true;
      arr_used[g] = false;
      arr_map[f] = kNoArrow;
    }
    return false;
  }

  bool assign_objects(ObjId x) {
    if (x == a.object_count()) return assign_arrows(0);
    for (ObjId y = 0; y < b.object_count(); ++y) {
      if (obj_used[y] || !object_compatible(x, y)) continue;
      obj_map[x] = y;
      obj_used[y] = true;
      if (assign_objects(x + 1)) return true;
      obj_used[y] = false;
      obj_map[x] = -1;
    }
    return false;
  }
};

CategoryIso pack_iso(CatPtr a, CatPtr b, const IsoSearch& search) {
  CategoryIso iso;
  iso.fwd.dom = a;
  iso.fwd.cod = b;
  iso.fwd.obj_map = search.obj_map;
  iso.fwd.arr_map = search.arr_map;
  iso.bwd.dom = b;
  iso.bwd.cod = a;
  iso.bwd.obj_map.resize(static_cast<std::size_t>(b->object_count()));
  iso.bwd.arr_map.resize(static_cast<std::size_t>(b->arrow_count()));
  for (ObjId x = 0; x < a->object_count(); ++x) {
    iso.bwd.obj_map[search.obj_map[x]] = x;
  }
  for (ArrId f = 0; f < a->arrow_count(); ++f) {
    iso.bwd.arr_map[search.arr_map[f]] = f;
  }
  return iso;
}

}  // namespace

ValidationReport validate_iso(const CategoryIso& iso) {
  ValidationReport report;
  if (!iso.fwd.dom || !iso.fwd.cod || !iso.bwd.dom || !iso.bwd.cod ||
      *iso.fwd.dom != *iso.bwd.cod || *iso.fwd.cod != *iso.bwd.dom) {
    report.add("iso-endpoints", {},
               "directions do not connect the same two categories");
    return report;
  }
  if (const auto r = validate_functor(iso.fwd); !r.ok()) {
    report.add("iso-fwd-functor", {}, r.to_string());
  }
  if (const auto r = validate_functor(iso.bwd); !r.ok()) {
    report.add("iso-bwd-functor", {}, r.to_string());
  }
  if (!report.ok()) return report;

  for (ObjId x = 0; x < iso.fwd.dom->object_count(); ++x) {
    if (iso.bwd.obj_map[iso.fwd.obj_map[x]] != x) {
      report.add("iso-inverse", {x}, "object round trip is not the identity");
    }
  }
  for (ArrId f = 0; f < iso.fwd.dom->arrow_count(); ++f) {
    if (iso.bwd.arr_map[iso.fwd.arr_map[f]] != f) {
      report.add("iso-inverse", {f}, "arrow round trip is not the identity");
    }
  }
  for (ObjId y = 0; y < iso.fwd.cod->object_count(); ++y) {
    if (iso.fwd.obj_map[iso.bwd.obj_map[y]] != y) {
      report.add("iso-inverse", {y},
                 "object round trip (other direction) is not the identity");
    }
  }
  for (ArrId g = 0; g < iso.fwd.cod->arrow_count(); ++g) {
    if (iso.fwd.arr_map[iso.bwd.arr_map[g]] != g) {
      report.add("iso-inverse", {g},
                 "arrow round trip (other direction) is not the identity");
    }
  }
  return report;
}

std::optional<CategoryIso> find_category_iso(CatPtr a, CatPtr b) {
  if (!a || !b) throw std::invalid_argument("null category");
  if (a->object_count() != b->object_count() ||
      a->arrow_count() != b->arrow_count()) {
    return std::nullopt;
  }
  IsoSearch search(*a, *b);
  if (!search.assign_objects(0)) return std::nullopt;
  return pack_iso(a, b, search);
}

std::optional<CategoryIso> find_iso_over_base(const FibSetup& a,
                                              const FibSetup& b) {
  if (*a.base_ptr() != *b.base_ptr()) {
    throw std::invalid_argument(
        "setups do not share a base category id for id");
  }
  if (a.total().object_count() != b.total().object_count() ||
      a.total().arrow_count() != b.total().arrow_count()) {
    return std::nullopt;
  }
  IsoSearch search(a.total(), b.total());
  search.pi_a = &a.pi();
  search.pi_b = &b.pi();
  if (!search.assign_objects(0)) return std::nullopt;
  return pack_iso(a.total_ptr(), b.total_ptr(), search);
}

}  // namespace fibdual
