#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fibdual/category.hpp"

namespace fibdual {

// Raised when a cartesian lift that the fibration property promises does
// not exist. Carries the witnessing base arrow and target object.
class NotAFibrationError : public std::runtime_error {
 public:
  NotAFibrationError(ArrId base_arrow, ObjId target, const std::string& what)
      : std::runtime_error(what), base_arrow_(base_arrow), target_(target) {}

  ArrId base_arrow() const { return base_arrow_; }
  ObjId target() const { return target_; }

 private:
  ArrId base_arrow_;
  ObjId target_;
};

// A functor pi : total -> base packaged with per-arrow classification.
// Everything is computed eagerly at construction by exhaustive scans over
// the closed tables; the categories involved stay small enough that this
// is the simplest correct definition of each notion.
class FibSetup {
 public:
  // Throws std::invalid_argument unless total and base validate as
  // categories and pi validates as a functor between them.
  explicit FibSetup(FunctorData pi);

  const FunctorData& pi() const { return pi_; }
  const FinCategory& total() const { return *pi_.dom; }
  const FinCategory& base() const { return *pi_.cod; }
  CatPtr total_ptr() const { return pi_.dom; }
  CatPtr base_ptr() const { return pi_.cod; }

  ObjId over_object(ObjId x) const { return pi_.obj_map[x]; }
  ArrId over_arrow(ArrId f) const { return pi_.arr_map[f]; }

  // pi(f) is an identity in the base.
  bool is_vertical(ArrId f) const { return vertical_[f]; }

  // Post-composition with f induces a bijection hom_xi(z, src f) ->
  // hom_{xi.pi(f)}(z, tgt f) for every base arrow xi ending at pi(src f)
  // and every z over src xi. Checked by definition, not via lifts.
  bool is_cartesian(ArrId f) const { return cartesian_[f]; }

  std::vector<ArrId> vertical_arrows() const;
  std::vector<ArrId> cartesian_arrows() const;

  // All total arrows f with src f = x, tgt f = y, pi(f) = alpha.
  std::vector<ArrId> hom_over(ObjId x, ObjId y, ArrId alpha) const;

  // All total objects over base object a, ascending.
  std::vector<ObjId> objects_over(ObjId a) const;

  // All cartesian arrows over alpha ending at y, ascending.
  std::vector<ArrId> cartesian_lifts(ArrId alpha, ObjId y) const;

  // The least-id cartesian lift; the deterministic choice used everywhere
  // a single lift is needed. Throws NotAFibrationError when none exists.
  ArrId smallest_lift(ArrId alpha, ObjId y) const;

 private:
  FunctorData pi_;
  std::vector<bool> vertical_;
  std::vector<bool> cartesian_;
};

struct FibrationCheck {
  // A (base arrow, total object over its target) pair with no cartesian
  // lift; empty when pi is a fibration.
  std::optional<std::pair<ArrId, ObjId>> counterexample;

  bool is_fibration() const { return !counterexample.has_value(); }
};

// pi is a fibration iff every base arrow has a cartesian lift ending at
// every object over its target. Scans (alpha, y) pairs in lex order and
// reports the first failure.
FibrationCheck is_fibration(const FibSetup& setup);

struct Fibre {
  // The fibre over a base object as a category in its own right, plus the
  // inclusion into the total category that recovers original ids.
  CatPtr category;
  FunctorData embedding;
};

// Objects over `a` and vertical arrows between them, with ids compacted
// in ascending original order.
Fibre fibre(const FibSetup& setup, ObjId a);

}  // namespace fibdual
