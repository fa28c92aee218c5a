#include "fibdual/category.hpp"

#include <sstream>
#include <stdexcept>

namespace fibdual {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

std::string arrow_str(const FinCategory& c, ArrId f) {
  std::ostringstream out;
  out << "arrow " << f << " (" << c.src(f) << " -> " << c.tgt(f) << ")";
  return out.str();
}

}  // namespace

FinCategory::FinCategory(ObjId object_count, std::vector<Arrow> arrows,
                         std::vector<ArrId> identities,
                         std::vector<ArrId> composites)
    : object_count_(object_count),
      arrows_(std::move(arrows)),
      identity_(std::move(identities)),
      composites_(std::move(composites)) {
  if (object_count_ < 0) fail("negative object count");
  const auto n = arrows_.size();
  if (identity_.size() != static_cast<std::size_t>(object_count_)) {
    fail("identity list size does not match object count");
  }
  if (composites_.size() != n * n) {
    fail("composite table size is not arrow_count^2");
  }
  for (const Arrow& a : arrows_) {
    if (a.src < 0 || a.src >= object_count_ || a.tgt < 0 ||
        a.tgt >= object_count_) {
      fail("arrow endpoint out of range");
    }
  }
  for (ArrId id : identity_) {
    if (id < 0 || static_cast<std::size_t>(id) >= n) {
      fail("identity arrow id out of range");
    }
  }
  for (ArrId id : composites_) {
    if (id != kNoArrow && (id < 0 || static_cast<std::size_t>(id) >= n)) {
      fail("composite arrow id out of range");
    }
  }
}

ObjId FinCategory::check_obj(ObjId o) const {
  if (o < 0 || o >= object_count_) fail("object id out of range");
  return o;
}

ArrId FinCategory::check_arr(ArrId f) const {
  if (f < 0 || static_cast<std::size_t>(f) >= arrows_.size()) {
    fail("arrow id out of range");
  }
  return f;
}

bool FinCategory::is_identity(ArrId f) const {
  check_arr(f);
  for (ArrId id : identity_) {
    if (id == f) return true;
  }
  return false;
}

ArrId FinCategory::compose(ArrId f, ArrId g) const {
  const ArrId fg = composite_or_none(f, g);
  if (fg == kNoArrow) {
    std::ostringstream out;
    out << "no composite for " << arrow_str(*this, f) << " then "
        << arrow_str(*this, g);
    fail(out.str());
  }
  return fg;
}

std::vector<ArrId> FinCategory::hom_set(ObjId a, ObjId b) const {
  check_obj(a);
  check_obj(b);
  std::vector<ArrId> out;
  for (ArrId f = 0; f < arrow_count(); ++f) {
    if (arrows_[f].src == a && arrows_[f].tgt == b) out.push_back(f);
  }
  return out;
}

std::optional<ArrId> FinCategory::inverse(ArrId f) const {
  check_arr(f);
  const ArrId id_src = identity(src(f));
  const ArrId id_tgt = identity(tgt(f));
  for (ArrId g : hom_set(tgt(f), src(f))) {
    if (composite_or_none(f, g) == id_src &&
        composite_or_none(g, f) == id_tgt) {
      return g;
    }
  }
  return std::nullopt;
}

ObjId CategoryBuilder::add_object() {
  identity_.push_back(kNoArrow);
  return objects_++;
}

ArrId CategoryBuilder::add_arrow(ObjId src, ObjId tgt) {
  if (src < 0 || src >= objects_ || tgt < 0 || tgt >= objects_) {
    fail("arrow endpoint out of range");
  }
  arrows_.push_back({src, tgt});
  return static_cast<ArrId>(arrows_.size() - 1);
}

ArrId CategoryBuilder::add_identity(ObjId o) {
  const ArrId f = add_arrow(o, o);
  identity_[o] = f;
  return f;
}

void CategoryBuilder::set_identity(ObjId o, ArrId f) {
  if (o < 0 || o >= objects_) fail("object id out of range");
  if (f < 0 || static_cast<std::size_t>(f) >= arrows_.size()) {
    fail("arrow id out of range");
  }
  identity_[o] = f;
}

void CategoryBuilder::set_composite(ArrId f, ArrId g, ArrId fg) {
  const auto n = arrows_.size();
  if (f < 0 || static_cast<std::size_t>(f) >= n || g < 0 ||
      static_cast<std::size_t>(g) >= n || fg < 0 ||
      static_cast<std::size_t>(fg) >= n) {
    fail("arrow id out of range");
  }
  if (composites_.size() < n) composites_.resize(n);
  auto& row = composites_[static_cast<std::size_t>(f)];
  if (row.size() < n) row.resize(n, kNoArrow);
  row[static_cast<std::size_t>(g)] = fg;
}

FinCategory CategoryBuilder::build() const {
  for (ObjId o = 0; o < objects_; ++o) {
    if (identity_[o] == kNoArrow) {
      std::ostringstream out;
      out << "object " << o << " has no identity arrow";
      fail(out.str());
    }
  }
  const auto n = arrows_.size();
  std::vector<ArrId> table(n * n, kNoArrow);
  for (std::size_t f = 0; f < composites_.size(); ++f) {
    const auto& row = composites_[f];
    for (std::size_t g = 0; g < row.size(); ++g) {
      table[f * n + g] = row[g];
    }
  }
  return FinCategory(objects_, arrows_, identity_, std::move(table));
}

ValidationReport validate_category(const FinCategory& c) {
  ValidationReport report;
  const ArrId n = c.arrow_count();

  for (ObjId o = 0; o < c.object_count(); ++o) {
    const ArrId id = c.identity(o);
    if (c.src(id) != o || c.tgt(id) != o) {
      std::ostringstream out;
      out << "identity of object " << o << " is " << arrow_str(c, id);
      report.add("identity-endpoints", {o, id}, out.str());
    }
  }

  for (ArrId f = 0; f < n; ++f) {
    const ArrId left = c.identity(c.src(f));
    const ArrId right = c.identity(c.tgt(f));
    if (c.composite_or_none(left, f) != f) {
      std::ostringstream out;
      out << "identity " << left << " then " << f << " is not " << f;
      report.add("identity-law", {left, f}, out.str());
    }
    if (c.composite_or_none(f, right) != f) {
      std::ostringstream out;
      out << f << " then identity " << right << " is not " << f;
      report.add("identity-law", {f, right}, out.str());
    }
  }

  for (ArrId f = 0; f < n; ++f) {
    for (ArrId g = 0; g < n; ++g) {
      const ArrId fg = c.composite_or_none(f, g);
      if (c.composable(f, g)) {
        if (fg == kNoArrow) {
          std::ostringstream out;
          out << "composable pair " << f << ", " << g << " has no composite";
          report.add("missing-composite", {f, g}, out.str());
        } else if (c.src(fg) != c.src(f) || c.tgt(fg) != c.tgt(g)) {
          std::ostringstream out;
          out << "composite of " << f << ", " << g << " is "
              << arrow_str(c, fg) << ", expected " << c.src(f) << " -> "
              << c.tgt(g);
          report.add("composite-endpoints", {f, g, fg}, out.str());
        }
      } else if (fg != kNoArrow) {
        std::ostringstream out;
        out << "non-composable pair " << f << ", " << g << " has composite "
            << fg;
        report.add("spurious-composite", {f, g, fg}, out.str());
      }
    }
  }

  // Associativity over defined entries only; gaps were reported above.
  for (ArrId f = 0; f < n; ++f) {
    for (ArrId g = 0; g < n; ++g) {
      const ArrId fg = c.composite_or_none(f, g);
      if (fg == kNoArrow || !c.composable(f, g)) continue;
      for (ArrId h = 0; h < n; ++h) {
        if (!c.composable(g, h)) continue;
        const ArrId gh = c.composite_or_none(g, h);
        if (gh == kNoArrow) continue;
        const ArrId left = c.composite_or_none(fg, h);
        const ArrId right = c.composite_or_none(f, gh);
        if (left != kNoArrow && right != kNoArrow && left != right) {
          std::ostringstream out;
          out << "(" << f << " then " << g << ") then " << h << " = " << left
              << " but " << f << " then (" << g << " then " << h
              << ") = " << right;
          report.add("associativity", {f, g, h}, out.str());
        }
      }
    }
  }

  return report;
}

ValidationReport validate_functor(const FunctorData& f) {
  ValidationReport report;
  const FinCategory& dom = *f.dom;
  const FinCategory& cod = *f.cod;

  if (f.obj_map.size() != static_cast<std::size_t>(dom.object_count()) ||
      f.arr_map.size() != static_cast<std::size_t>(dom.arrow_count())) {
    report.add("functor-shape", {},
               "object or arrow map size does not match the domain");
    return report;
  }
  for (ObjId o : f.obj_map) {
    if (o < 0 || o >= cod.object_count()) {
      report.add("functor-shape", {o}, "object image out of range");
      return report;
    }
  }
  for (ArrId a : f.arr_map) {
    if (a < 0 || a >= cod.arrow_count()) {
      report.add("functor-shape", {a}, "arrow image out of range");
      return report;
    }
  }

  for (ArrId a = 0; a < dom.arrow_count(); ++a) {
    const ArrId img = f.arr_map[a];
    if (cod.src(img) != f.obj_map[dom.src(a)] ||
        cod.tgt(img) != f.obj_map[dom.tgt(a)]) {
      std::ostringstream out;
      out << "image of " << arrow_str(dom, a) << " is " << arrow_str(cod, img);
      report.add("functor-endpoints", {a, img}, out.str());
    }
  }
  for (ObjId o = 0; o < dom.object_count(); ++o) {
    const ArrId img = f.arr_map[dom.identity(o)];
    if (img != cod.identity(f.obj_map[o])) {
      std::ostringstream out;
      out << "identity of " << o << " maps to non-identity " << img;
      report.add("functor-identity", {o, img}, out.str());
    }
  }
  for (ArrId a = 0; a < dom.arrow_count(); ++a) {
    for (ArrId b = 0; b < dom.arrow_count(); ++b) {
      if (!dom.composable(a, b)) continue;
      const ArrId ab = dom.composite_or_none(a, b);
      if (ab == kNoArrow) continue;
      const ArrId img =
          cod.composite_or_none(f.arr_map[a], f.arr_map[b]);
      if (img != f.arr_map[ab]) {
        std::ostringstream out;
        out << "image of composite of " << a << ", " << b << " is "
            << f.arr_map[ab] << " but composite of images is " << img;
        report.add("functor-composition", {a, b}, out.str());
      }
    }
  }
  return report;
}

FunctorData identity_functor(CatPtr c) {
  FunctorData f;
  f.dom = c;
  f.cod = c;
  f.obj_map.resize(static_cast<std::size_t>(c->object_count()));
  f.arr_map.resize(static_cast<std::size_t>(c->arrow_count()));
  for (ObjId o = 0; o < c->object_count(); ++o) f.obj_map[o] = o;
  for (ArrId a = 0; a < c->arrow_count(); ++a) f.arr_map[a] = a;
  return f;
}

FunctorData compose_functors(const FunctorData& f, const FunctorData& g) {
  if (*f.cod != *g.dom) {
    fail("functor composition endpoint mismatch");
  }
  FunctorData out;
  out.dom = f.dom;
  out.cod = g.cod;
  out.obj_map.reserve(f.obj_map.size());
  out.arr_map.reserve(f.arr_map.size());
  for (ObjId o : f.obj_map) out.obj_map.push_back(g.obj_map[o]);
  for (ArrId a : f.arr_map) out.arr_map.push_back(g.arr_map[a]);
  return out;
}

FinCategory opposite(const FinCategory& c) {
  const ArrId n = c.arrow_count();
  std::vector<Arrow> arrows;
  arrows.reserve(static_cast<std::size_t>(n));
  for (ArrId f = 0; f < n; ++f) arrows.push_back({c.tgt(f), c.src(f)});
  std::vector<ArrId> identities;
  identities.reserve(static_cast<std::size_t>(c.object_count()));
  for (ObjId o = 0; o < c.object_count(); ++o) {
    identities.push_back(c.identity(o));
  }
  std::vector<ArrId> table(static_cast<std::size_t>(n) * n, kNoArrow);
  for (ArrId f = 0; f < n; ++f) {
    for (ArrId g = 0; g < n; ++g) {
      table[static_cast<std::size_t>(f) * n + g] = c.composite_or_none(g, f);
    }
  }
  return FinCategory(c.object_count(), std::move(arrows),
                     std::move(identities), std::move(table));
}

FinCategory relabel(const FinCategory& c, const std::vector<ObjId>& obj_perm,
                    const std::vector<ArrId>& arr_perm) {
  const ArrId n = c.arrow_count();
  if (obj_perm.size() != static_cast<std::size_t>(c.object_count()) ||
      arr_perm.size() != static_cast<std::size_t>(n)) {
    fail("relabel permutation size mismatch");
  }
  std::vector<bool> seen_obj(obj_perm.size(), false);
  for (ObjId o : obj_perm) {
    if (o < 0 || static_cast<std::size_t>(o) >= obj_perm.size() || seen_obj[o]) {
      fail("object relabeling is not a permutation");
    }
    seen_obj[o] = true;
  }
  std::vector<bool> seen_arr(arr_perm.size(), false);
  for (ArrId a : arr_perm) {
    if (a < 0 || static_cast<std::size_t>(a) >= arr_perm.size() || seen_arr[a]) {
      fail("arrow relabeling is not a permutation");
    }
    seen_arr[a] = true;
  }

  std::vector<Arrow> arrows(static_cast<std::size_t>(n));
  for (ArrId f = 0; f < n; ++f) {
    arrows[arr_perm[f]] = {obj_perm[c.src(f)], obj_perm[c.tgt(f)]};
  }
  std::vector<ArrId> identities(static_cast<std::size_t>(c.object_count()));
  for (ObjId o = 0; o < c.object_count(); ++o) {
    identities[obj_perm[o]] = arr_perm[c.identity(o)];
  }
  std::vector<ArrId> table(static_cast<std::size_t>(n) * n, kNoArrow);
  for (ArrId f = 0; f < n; ++f) {
    for (ArrId g = 0; g < n; ++g) {
      const ArrId fg = c.composite_or_none(f, g);
      if (fg != kNoArrow) {
        table[static_cast<std::size_t>(arr_perm[f]) * n + arr_perm[g]] =
            arr_perm[fg];
      }
    }
  }
  return FinCategory(c.object_count(), std::move(arrows),
                     std::move(identities), std::move(table));
}

}  // namespace fibdual
