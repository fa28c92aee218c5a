#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "fibdual/fibration.hpp"

namespace fibdual {

// A composable pair (v, h) with v vertical and h cartesian: v then h
// traverses an arrow of the total category in two stages.
struct VhPair {
  ArrId v = kNoArrow;
  ArrId h = kNoArrow;

  auto operator<=>(const VhPair&) const = default;
};

// Factors f as vertical-then-cartesian through the least-id cartesian lift
// of pi(f) ending at tgt(f). Throws NotAFibrationError if no lift exists,
// std::logic_error if the lift's universal property fails to produce a
// unique vertical (possible only on a non-fibration).
VhPair vh_factorize(const FibSetup& setup, ArrId f);

// Every factorization of f as vertical-then-cartesian, in ascending
// (v, h) order.
std::vector<VhPair> all_vh_factorizations(const FibSetup& setup, ArrId f);

// Two factorizations a, b of the same arrow are connected by a unique
// vertical cartesian i with (a.v then i) = b.v and (i then b.h) = a.h;
// such an i is automatically invertible. Returns that connector, or
// nullopt when a and b factor different arrows (or are not linked, which
// on a fibration cannot happen for factorizations of one arrow).
std::optional<ArrId> pair_equivalence_witness(const FibSetup& setup,
                                              const VhPair& a,
                                              const VhPair& b);

bool pairs_equivalent(const FibSetup& setup, const VhPair& a, const VhPair& b);

// Composes factored pairs: given a = (v1, h1) and b = (v2, h2) with
// tgt(h1) = src(v2), produces a factorization of (v1 h1 v2 h2) by lifting
// pi(h1) to the source of b's cartesian leg and filling the square with
// the unique vertical w such that w then k = h1 then v2.
VhPair compose_pairs(const FibSetup& setup, const VhPair& a, const VhPair& b);

// The universal property of a cartesian arrow k as an equation solver:
// the unique vertical w from `from` with (w then k) = whole. `whole` must
// run from `from` to tgt(k) over pi(k). Throws std::logic_error when the
// solution is missing or ambiguous, which cannot happen over a fibration.
ArrId unique_vertical_fill(const FibSetup& setup, ObjId from, ArrId k,
                           ArrId whole);

}  // namespace fibdual
