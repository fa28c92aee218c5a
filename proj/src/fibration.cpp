#include "fibdual/fibration.hpp"

#include <algorithm>
#include <sstream>

namespace fibdual {

namespace {

// The defining property, checked exhaustively: for every xi : W -> pi(src f)
// in the base and every z over W, composing with f must map hom_xi(z, src f)
// bijectively onto hom_{xi.pi(f)}(z, tgt f).
bool cartesian_by_definition(const FunctorData& pi, ArrId f) {
  const FinCategory& total = *pi.dom;
  const FinCategory& base = *pi.cod;
  const ObjId x = total.src(f);
  const ObjId y = total.tgt(f);
  const ArrId pf = pi.arr_map[f];

  for (ArrId xi = 0; xi < base.arrow_count(); ++xi) {
    if (base.tgt(xi) != pi.obj_map[x]) continue;
    const ArrId xi_pf = base.compose(xi, pf);
    for (ObjId z = 0; z < total.object_count(); ++z) {
      if (pi.obj_map[z] != base.src(xi)) continue;

      // Arrows z -> x over xi, and their images z -> y over xi.pi(f).
      std::vector<ArrId> images;
      for (ArrId g : total.hom_set(z, x)) {
        if (pi.arr_map[g] != xi) continue;
        images.push_back(total.compose(g, f));
      }
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        return false;  // not injective
      }
      std::vector<ArrId> targets;
      for (ArrId h : total.hom_set(z, y)) {
        if (pi.arr_map[h] == xi_pf) targets.push_back(h);
      }
      if (images != targets) return false;  // not surjective
    }
  }
  return true;
}

}  // namespace

FibSetup::FibSetup(FunctorData pi) : pi_(std::move(pi)) {
  if (!pi_.dom || !pi_.cod) {
    throw std::invalid_argument("projection functor has no categories");
  }
  if (const auto r = validate_category(*pi_.dom); !r.ok()) {
    throw std::invalid_argument("total category is invalid: " + r.to_string());
  }
  if (const auto r = validate_category(*pi_.cod); !r.ok()) {
    throw std::invalid_argument("base category is invalid: " + r.to_string());
  }
  if (const auto r = validate_functor(pi_); !r.ok()) {
    throw std::invalid_argument("projection is not a functor: " +
                                r.to_string());
  }

  const FinCategory& total = *pi_.dom;
  const FinCategory& base = *pi_.cod;
  vertical_.resize(static_cast<std::size_t>(total.arrow_count()));
  cartesian_.resize(static_cast<std::size_t>(total.arrow_count()));
  for (ArrId f = 0; f < total.arrow_count(); ++f) {
    vertical_[f] = base.is_identity(pi_.arr_map[f]);
    cartesian_[f] = cartesian_by_definition(pi_, f);
  }
}

std::vector<ArrId> FibSetup::vertical_arrows() const {
  std::vector<ArrId> out;
  for (ArrId f = 0; f < total().arrow_count(); ++f) {
    if (vertical_[f]) out.push_back(f);
  }
  return out;
}

std::vector<ArrId> FibSetup::cartesian_arrows() const {
  std::vector<ArrId> out;
  for (ArrId f = 0; f < total().arrow_count(); ++f) {
    if (cartesian_[f]) out.push_back(f);
  }
  return out;
}

std::vector<ArrId> FibSetup::hom_over(ObjId x, ObjId y, ArrId alpha) const {
  std::vector<ArrId> out;
  for (ArrId f : total().hom_set(x, y)) {
    if (pi_.arr_map[f] == alpha) out.push_back(f);
  }
  return out;
}

std::vector<ObjId> FibSetup::objects_over(ObjId a) const {
  std::vector<ObjId> out;
  for (ObjId x = 0; x < total().object_count(); ++x) {
    if (pi_.obj_map[x] == a) out.push_back(x);
  }
  return out;
}

std::vector<ArrId> FibSetup::cartesian_lifts(ArrId alpha, ObjId y) const {
  std::vector<ArrId> out;
  for (ArrId f = 0; f < total().arrow_count(); ++f) {
    if (cartesian_[f] && total().tgt(f) == y && pi_.arr_map[f] == alpha) {
      out.push_back(f);
    }
  }
  return out;
}

ArrId FibSetup::smallest_lift(ArrId alpha, ObjId y) const {
  const auto lifts = cartesian_lifts(alpha, y);
  if (lifts.empty()) {
    std::ostringstream out;
    out << "no cartesian lift of base arrow " << alpha
        << " ending at total object " << y;
    throw NotAFibrationError(alpha, y, out.str());
  }
  return lifts.front();
}

FibrationCheck is_fibration(const FibSetup& setup) {
  const FinCategory& base = setup.base();
  for (ArrId alpha = 0; alpha < base.arrow_count(); ++alpha) {
    for (ObjId y : setup.objects_over(base.tgt(alpha))) {
      if (setup.cartesian_lifts(alpha, y).empty()) {
        return {std::make_pair(alpha, y)};
      }
    }
  }
  return {std::nullopt};
}

Fibre fibre(const FibSetup& setup, ObjId a) {
  const FinCategory& total = setup.total();
  if (a < 0 || a >= setup.base().object_count()) {
    throw std::invalid_argument("base object id out of range");
  }

  const std::vector<ObjId> objects = setup.objects_over(a);
  std::vector<ArrId> arrows;
  for (ArrId f = 0; f < total.arrow_count(); ++f) {
    if (setup.is_vertical(f) && setup.over_object(total.src(f)) == a) {
      arrows.push_back(f);
    }
  }

  std::vector<ObjId> obj_index(static_cast<std::size_t>(total.object_count()),
                               -1);
  for (std::size_t i = 0; i < objects.size(); ++i) {
    obj_index[objects[i]] = static_cast<ObjId>(i);
  }
  std::vector<ArrId> arr_index(static_cast<std::size_t>(total.arrow_count()),
                               kNoArrow);
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    arr_index[arrows[i]] = static_cast<ArrId>(i);
  }

  std::vector<Arrow> fibre_arrows;
  fibre_arrows.reserve(arrows.size());
  for (ArrId f : arrows) {
    fibre_arrows.push_back({obj_index[total.src(f)], obj_index[total.tgt(f)]});
  }
  std::vector<ArrId> identities;
  identities.reserve(objects.size());
  for (ObjId x : objects) identities.push_back(arr_index[total.identity(x)]);

  const auto n = arrows.size();
  std::vector<ArrId> table(n * n, kNoArrow);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!total.composable(arrows[i], arrows[j])) continue;
      // Verticals over the same object compose to a vertical, so the
      // composite is again in the fibre.
      table[i * n + j] = arr_index[total.compose(arrows[i], arrows[j])];
    }
  }

  Fibre out;
  out.category = make_cat(FinCategory(static_cast<ObjId>(objects.size()),
                                      std::move(fibre_arrows),
                                      std::move(identities), std::move(table)));
  out.embedding.dom = out.category;
  out.embedding.cod = setup.total_ptr();
  out.embedding.obj_map = objects;
  out.embedding.arr_map = arrows;
  return out;
}

}  // namespace fibdual
