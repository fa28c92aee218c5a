#pragma once

#include <optional>

#include "fibdual/category.hpp"
#include "fibdual/fibration.hpp"

namespace fibdual {

// An isomorphism of categories as a pair of mutually inverse functors.
struct CategoryIso {
  FunctorData fwd;
  FunctorData bwd;
};

// Both directions must be functors and compose to identities on ids.
ValidationReport validate_iso(const CategoryIso& iso);

// Inverts the maps of a functor expected to be bijective. Construction
// code uses this where bijectivity is a theorem about the input, so a
// collision or gap throws std::logic_error naming `what`.
FunctorData invert_functor(const FunctorData& fwd, const char* what);

// Backtracking search for an isomorphism a -> b. Objects are assigned in
// id order; arrow images are forced per hom-set via incremental
// composition consistency checks. Deterministic: returns the lex-least
// assignment when one exists.
std::optional<CategoryIso> find_category_iso(CatPtr a, CatPtr b);

// Same search restricted to functors over a shared base: both setups must
// have equal base categories (id for id), and the isomorphism must satisfy
// pi_b(F(x)) = pi_a(x) on objects and arrows.
std::optional<CategoryIso> find_iso_over_base(const FibSetup& a,
                                              const FibSetup& b);

}  // namespace fibdual
