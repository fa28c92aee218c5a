#include "fibdual/indexed.hpp"

#include <sstream>
#include <stdexcept>

namespace fibdual {

ValidationReport validate_indexed(const IndexedCat& ix) {
  ValidationReport report;
  if (!ix.base) {
    report.add("indexed-shape", {}, "no base category");
    return report;
  }
  const FinCategory& base = *ix.base;
  if (const auto r = validate_category(base); !r.ok()) {
    report.add("indexed-base", {}, r.to_string());
    return report;
  }
  if (ix.fibres.size() != static_cast<std::size_t>(base.object_count()) ||
      ix.reindex.size() != static_cast<std::size_t>(base.arrow_count())) {
    report.add("indexed-shape", {},
               "fibre or reindex list size does not match the base");
    return report;
  }
  for (ObjId a = 0; a < base.object_count(); ++a) {
    if (!ix.fibres[a]) {
      report.add("indexed-fibre", {a}, "missing fibre");
      return report;
    }
    if (const auto r = validate_category(*ix.fibres[a]); !r.ok()) {
      report.add("indexed-fibre", {a}, r.to_string());
    }
  }
  if (!report.ok()) return report;

  for (ArrId alpha = 0; alpha < base.arrow_count(); ++alpha) {
    const FunctorData& f = ix.reindex[alpha];
    if (!f.dom || !f.cod || *f.dom != *ix.fibres[base.tgt(alpha)] ||
        *f.cod != *ix.fibres[base.src(alpha)]) {
      report.add("indexed-reindex-endpoints", {alpha},
                 "reindex functor does not run from the fibre over the "
                 "target to the fibre over the source");
      continue;
    }
    if (const auto r = validate_functor(f); !r.ok()) {
      report.add("indexed-reindex-functor", {alpha}, r.to_string());
    }
  }
  if (!report.ok()) return report;

  for (ObjId a = 0; a < base.object_count(); ++a) {
    const FunctorData& f = ix.reindex[base.identity(a)];
    bool is_id = true;
    for (std::size_t i = 0; i < f.obj_map.size() && is_id; ++i) {
      is_id = f.obj_map[i] == static_cast<ObjId>(i);
    }
    for (std::size_t i = 0; i < f.arr_map.size() && is_id; ++i) {
      is_id = f.arr_map[i] == static_cast<ArrId>(i);
    }
    if (!is_id) {
      report.add("indexed-identity", {a},
                 "identity base arrow does not carry the identity functor");
    }
  }

  for (ArrId alpha = 0; alpha < base.arrow_count(); ++alpha) {
    for (ArrId beta = 0; beta < base.arrow_count(); ++beta) {
      if (!base.composable(alpha, beta)) continue;
      const ArrId ab = base.composite_or_none(alpha, beta);
      if (ab == kNoArrow) continue;
      // Contravariance: (alpha then beta) pulls back by beta first.
      const FunctorData& fa = ix.reindex[alpha];
      const FunctorData& fb = ix.reindex[beta];
      const FunctorData& fab = ix.reindex[ab];
      bool ok = true;
      for (std::size_t x = 0; x < fab.obj_map.size() && ok; ++x) {
        ok = fab.obj_map[x] == fa.obj_map[fb.obj_map[x]];
      }
      for (std::size_t v = 0; v < fab.arr_map.size() && ok; ++v) {
        ok = fab.arr_map[v] == fa.arr_map[fb.arr_map[v]];
      }
      if (!ok) {
        report.add("indexed-composition", {alpha, beta},
                   "composite base arrow does not carry the reversed "
                   "composite of the reindex functors");
      }
    }
  }
  return report;
}

ObjId Grothendieck::object_id(ObjId base_obj, ObjId fibre_obj) const {
  const auto it = object_index.find({base_obj, fibre_obj});
  if (it == object_index.end()) {
    throw std::invalid_argument("no glued object with that pair");
  }
  return it->second;
}

ArrId Grothendieck::arrow_id(ArrId base_arrow, ArrId fibre_arrow,
                             ObjId target_obj) const {
  const auto it = arrow_index.find({base_arrow, fibre_arrow, target_obj});
  if (it == arrow_index.end()) {
    throw std::invalid_argument("no glued arrow with that triple");
  }
  return it->second;
}

Grothendieck grothendieck(const IndexedCat& ix) {
  if (const auto r = validate_indexed(ix); !r.ok()) {
    throw std::invalid_argument("invalid indexed data: " + r.to_string());
  }
  const FinCategory& base = *ix.base;

  std::vector<std::pair<ObjId, ObjId>> objects;
  std::map<std::pair<ObjId, ObjId>, ObjId> object_index;
  for (ObjId a = 0; a < base.object_count(); ++a) {
    for (ObjId x = 0; x < ix.fibres[a]->object_count(); ++x) {
      object_index[{a, x}] = static_cast<ObjId>(objects.size());
      objects.emplace_back(a, x);
    }
  }

  std::vector<GluedArrow> arrows;
  std::map<std::tuple<ArrId, ArrId, ObjId>, ArrId> arrow_index;
  std::vector<Arrow> ends;
  for (ArrId alpha = 0; alpha < base.arrow_count(); ++alpha) {
    const ObjId a = base.src(alpha);
    const ObjId b = base.tgt(alpha);
    const FinCategory& fibre_a = *ix.fibres[a];
    for (ObjId x = 0; x < fibre_a.object_count(); ++x) {
      for (ObjId y = 0; y < ix.fibres[b]->object_count(); ++y) {
        const ObjId pulled = ix.reindex[alpha].obj_map[y];
        for (ArrId v : fibre_a.hom_set(x, pulled)) {
          arrow_index[{alpha, v, y}] = static_cast<ArrId>(arrows.size());
          arrows.push_back({alpha, v, y});
          ends.push_back({object_index.at({a, x}), object_index.at({b, y})});
        }
      }
    }
  }

  std::vector<ArrId> identities;
  identities.reserve(objects.size());
  for (const auto& [a, x] : objects) {
    identities.push_back(
        arrow_index.at({base.identity(a), ix.fibres[a]->identity(x), x}));
  }

  const std::size_t n = arrows.size();
  std::vector<ArrId> table(n * n, kNoArrow);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ends[i].tgt != ends[j].src) continue;
      const GluedArrow& f = arrows[i];
      const GluedArrow& g = arrows[j];
      const ArrId ab = base.compose(f.base, g.base);
      const ArrId v = ix.fibres[base.src(f.base)]->compose(
          f.fibre_arrow, ix.reindex[f.base].arr_map[g.fibre_arrow]);
      table[i * n + j] = arrow_index.at({ab, v, g.target_obj});
    }
  }

  FunctorData pi;
  pi.dom = make_cat(FinCategory(static_cast<ObjId>(objects.size()),
                                std::move(ends), std::move(identities),
                                std::move(table)));
  pi.cod = ix.base;
  pi.obj_map.reserve(objects.size());
  for (const auto& [a, x] : objects) pi.obj_map.push_back(a);
  pi.arr_map.reserve(arrows.size());
  for (const GluedArrow& f : arrows) pi.arr_map.push_back(f.base);

  FibSetup setup(std::move(pi));
  return Grothendieck{ix,
                      std::move(setup),
                      std::move(objects),
                      std::move(arrows),
                      std::move(object_index),
                      std::move(arrow_index)};
}

ArrId triangle_arrow(const Grothendieck& g, ArrId alpha, ObjId y) {
  const FinCategory& base = *g.input.base;
  if (alpha < 0 || alpha >= base.arrow_count()) {
    throw std::invalid_argument("base arrow id out of range");
  }
  const CatPtr fibre_b = g.input.fibres[base.tgt(alpha)];
  if (y < 0 || y >= fibre_b->object_count()) {
    throw std::invalid_argument("fibre object id out of range");
  }
  const ObjId pulled = g.input.reindex[alpha].obj_map[y];
  const ArrId v = g.input.fibres[base.src(alpha)]->identity(pulled);
  return g.arrow_id(alpha, v, y);
}

IndexedCat dualize_indexed(const IndexedCat& ix) {
  if (const auto r = validate_indexed(ix); !r.ok()) {
    throw std::invalid_argument("invalid indexed data: " + r.to_string());
  }
  const FinCategory& base = *ix.base;
  IndexedCat out;
  out.base = ix.base;
  out.fibres.reserve(ix.fibres.size());
  for (const CatPtr& f : ix.fibres) out.fibres.push_back(make_cat(opposite(*f)));
  out.reindex.reserve(ix.reindex.size());
  for (ArrId alpha = 0; alpha < base.arrow_count(); ++alpha) {
    FunctorData f = ix.reindex[alpha];
    f.dom = out.fibres[base.tgt(alpha)];
    f.cod = out.fibres[base.src(alpha)];
    out.reindex.push_back(std::move(f));
  }
  return out;
}

DualAgreement check_dual_agreement(const IndexedCat& ix) {
  Grothendieck glued = grothendieck(ix);
  DualFib dual = build_dual(glued.setup);
  Grothendieck glued_op = grothendieck(dualize_indexed(ix));

  const FinCategory& base = *ix.base;
  FunctorData fwd;
  fwd.dom = glued_op.setup.total_ptr();
  fwd.cod = dual.dual.total_ptr();
  fwd.obj_map.reserve(glued_op.objects.size());
  for (const auto& [a, x] : glued_op.objects) {
    // Opposite fibres keep their object ids, so the pair names the same
    // glued object on both sides; dual total objects are glued objects.
    fwd.obj_map.push_back(glued.object_id(a, x));
  }
  fwd.arr_map.reserve(glued_op.arrows.size());
  for (const GluedArrow& f : glued_op.arrows) {
    const ObjId a = base.src(f.base);
    // In the opposite fibre f.fibre_arrow runs X -> pulled Y; in the
    // original fibre the same id runs pulled Y -> X.
    const ObjId x = ix.fibres[a]->tgt(f.fibre_arrow);
    const ArrId vertical_leg =
        glued.arrow_id(base.identity(a), f.fibre_arrow, x);
    const ArrId cartesian_leg = triangle_arrow(glued, f.base, f.target_obj);
    fwd.arr_map.push_back(dual.class_of({vertical_leg, cartesian_leg}));
  }

  CategoryIso iso{fwd, invert_functor(fwd, "indexed dual agreement")};
  return DualAgreement{std::move(glued), std::move(dual), std::move(glued_op),
                       std::move(iso)};
}

}  // namespace fibdual
