#include "fibdual/vh.hpp"

#include <sstream>
#include <stdexcept>

namespace fibdual {

namespace {

void check_pair(const FibSetup& setup, const VhPair& p, const char* which) {
  const FinCategory& total = setup.total();
  if (p.v < 0 || p.v >= total.arrow_count() || p.h < 0 ||
      p.h >= total.arrow_count()) {
    throw std::invalid_argument(std::string(which) +
                                " pair has an arrow id out of range");
  }
  if (!setup.is_vertical(p.v)) {
    throw std::invalid_argument(std::string(which) +
                                " pair's first leg is not vertical");
  }
  if (!setup.is_cartesian(p.h)) {
    throw std::invalid_argument(std::string(which) +
                                " pair's second leg is not cartesian");
  }
  if (!total.composable(p.v, p.h)) {
    throw std::invalid_argument(std::string(which) +
                                " pair's legs are not composable");
  }
}

}  // namespace

// The cartesian property of k makes "vertical w with w then k = whole" a
// one-solution equation whenever whole sits over pi(k) with matching source.
ArrId unique_vertical_fill(const FibSetup& setup, ObjId from, ArrId k,
                           ArrId whole) {
  const FinCategory& total = setup.total();
  std::optional<ArrId> found;
  for (ArrId w : total.hom_set(from, total.src(k))) {
    if (!setup.is_vertical(w)) continue;
    if (total.compose(w, k) != whole) continue;
    if (found.has_value()) {
      std::ostringstream out;
      out << "verticals " << *found << " and " << w << " both solve w then "
          << k << " = " << whole;
      throw std::logic_error(out.str());
    }
    found = w;
  }
  if (!found.has_value()) {
    std::ostringstream out;
    out << "no vertical w solves w then " << k << " = " << whole;
    throw std::logic_error(out.str());
  }
  return *found;
}

VhPair vh_factorize(const FibSetup& setup, ArrId f) {
  const FinCategory& total = setup.total();
  const ArrId h = setup.smallest_lift(setup.over_arrow(f), total.tgt(f));
  const ArrId v = unique_vertical_fill(setup, total.src(f), h, f);
  return {v, h};
}

std::vector<VhPair> all_vh_factorizations(const FibSetup& setup, ArrId f) {
  const FinCategory& total = setup.total();
  std::vector<VhPair> out;
  for (ArrId v = 0; v < total.arrow_count(); ++v) {
    if (!setup.is_vertical(v) || total.src(v) != total.src(f)) continue;
    for (ArrId h = 0; h < total.arrow_count(); ++h) {
      if (!setup.is_cartesian(h) || !total.composable(v, h)) continue;
      if (total.tgt(h) != total.tgt(f)) continue;
      if (total.composite_or_none(v, h) == f) out.push_back({v, h});
    }
  }
  return out;
}

std::optional<ArrId> pair_equivalence_witness(const FibSetup& setup,
                                              const VhPair& a,
                                              const VhPair& b) {
  check_pair(setup, a, "first");
  check_pair(setup, b, "second");
  const FinCategory& total = setup.total();
  std::optional<ArrId> found;
  for (ArrId i : total.hom_set(total.tgt(a.v), total.tgt(b.v))) {
    if (!setup.is_vertical(i) || !setup.is_cartesian(i)) continue;
    if (total.compose(a.v, i) != b.v) continue;
    if (total.compose(i, b.h) != a.h) continue;
    if (found.has_value()) {
      throw std::logic_error("connector between factorizations is not unique");
    }
    found = i;
  }
  if (found.has_value() && !total.is_isomorphism(*found)) {
    // Vertical cartesian arrows are invertible; a non-iso connector means
    // the ambient functor is not the fibration this module assumes.
    throw std::logic_error("vertical cartesian connector is not invertible");
  }
  return found;
}

bool pairs_equivalent(const FibSetup& setup, const VhPair& a,
                      const VhPair& b) {
  return pair_equivalence_witness(setup, a, b).has_value();
}

VhPair compose_pairs(const FibSetup& setup, const VhPair& a, const VhPair& b) {
  check_pair(setup, a, "first");
  check_pair(setup, b, "second");
  const FinCategory& total = setup.total();
  if (total.tgt(a.h) != total.src(b.v)) {
    throw std::invalid_argument("pairs are not composable end to end");
  }

  // Rewrite (a.h then b.v), cartesian then vertical, as vertical then
  // cartesian through the chosen lift of pi(a.h) into b's apex.
  const ArrId k = setup.smallest_lift(setup.over_arrow(a.h), total.src(b.h));
  const ArrId t = total.compose(a.h, b.v);
  const ArrId w = unique_vertical_fill(setup, total.src(a.h), k, t);

  const VhPair result{total.compose(a.v, w), total.compose(k, b.h)};
  const ArrId whole =
      total.compose(total.compose(a.v, a.h), total.compose(b.v, b.h));
  if (total.compose(result.v, result.h) != whole) {
    throw std::logic_error("pair composition does not factor the composite");
  }
  return result;
}

}  // namespace fibdual
