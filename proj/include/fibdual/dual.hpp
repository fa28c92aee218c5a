#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "fibdual/iso.hpp"
#include "fibdual/vh.hpp"

namespace fibdual {

// A span with both legs leaving a common apex: v vertical, h cartesian.
// Read as a one-step path from tgt(v) to tgt(h) that goes backwards along
// v and forwards along h.
struct VhSpan {
  ArrId v = kNoArrow;
  ArrId h = kNoArrow;

  auto operator<=>(const VhSpan&) const = default;
};

// All spans of the setup in ascending (v, h) order.
std::vector<VhSpan> all_spans(const FibSetup& setup);

// Two spans are identified when a vertical isomorphism i between their
// apexes carries one onto the other: (i then a.v) = b.v and (i then a.h)
// = b.h. Returns that i (unique when it exists), or nullopt.
std::optional<ArrId> span_equivalence_witness(const FibSetup& setup,
                                              const VhSpan& a,
                                              const VhSpan& b);

bool spans_equivalent(const FibSetup& setup, const VhSpan& a, const VhSpan& b);

// An equivalence class of spans, listed exhaustively. Serves as a single
// arrow src -> tgt of the dual total category; members.front() is the
// lex-least span and acts as the canonical representative.
struct Comorphism {
  ObjId src = -1;
  ObjId tgt = -1;
  std::vector<VhSpan> members;

  const VhSpan& canonical() const { return members.front(); }
};

// All classes, ordered by their canonical representatives. The index of a
// class in this vector is its arrow id in the dual total category.
std::vector<Comorphism> enumerate_comorphisms(const FibSetup& setup);

// Composes spans a : X -> Y and b : Y -> Z by pulling a's cartesian leg
// back along b's vertical leg: k is the chosen cartesian lift of pi(a.h)
// into b's apex, w the unique vertical with (w then a.h) = (k then b.v),
// and the result is (w then a.v, k then b.h). The class of the result is
// independent of every choice made; compose_comorphisms relies on that.
VhSpan compose_spans(const FibSetup& setup, const VhSpan& a, const VhSpan& b);

// A fibration together with its dual fibration over the same base.
// Arrow c of dual.total() is the class classes[c]; objects of dual.total()
// are the objects of source.total(), id for id.
struct DualFib {
  FibSetup source;
  FibSetup dual;
  std::vector<Comorphism> classes;
  std::map<VhSpan, ArrId> span_class;

  // The dual arrow id of the class containing s. Throws
  // std::invalid_argument when s is not a span of the source setup.
  ArrId class_of(const VhSpan& s) const;
};

// Constructs the dual: total objects are kept, arrows are span classes,
// composition goes through compose_spans on canonical representatives,
// and the projection sends a class to pi(h) of any member. Throws
// NotAFibrationError when the input is not a fibration.
DualFib build_dual(const FibSetup& setup);

ArrId compose_comorphisms(const DualFib& d, ArrId c1, ArrId c2);

// Per dual arrow: cartesianness computed from the definition in the dual
// setup, against the predicate "some member has an identity vertical leg".
// The two columns agreeing for every class is a checkable theorem.
struct CartesianAgreement {
  std::vector<bool> by_definition;
  std::vector<bool> by_identity_rep;

  bool agree() const { return by_definition == by_identity_rep; }
};

CartesianAgreement cartesian_comorphism_check(const DualFib& d);

// For a vertical dual arrow, the unique member of the form (v, identity);
// returns that v. Throws std::invalid_argument on non-vertical classes.
ArrId vertical_comorphism_rep(const DualFib& d, ArrId cls);

// The fibre of the dual over a base object is the opposite of the fibre
// of the source over it: vertical class {(v, 1)} corresponds to v.
// Returns the isomorphism fibre(dual, a).category -> opposite of
// fibre(source, a).category.
CategoryIso fibre_duality_iso(const DualFib& d, ObjId a);

// When every vertical arrow of the source is invertible, the classes
// collapse: {(v, h)} maps to (v inverse) then h, an isomorphism
// dual.total() -> source.total() over the base. Throws
// std::invalid_argument when some vertical is not invertible.
CategoryIso dual_collapse_iso(const DualFib& d);

// The source fibration, its dual, the dual of the dual, and the explicit
// comparison functor source.total() -> second.dual.total() over the base.
struct DoubleDual {
  DualFib first;
  DualFib second;
  CategoryIso iso;
};

// The comparison on a vertical arrow v : X -> X': the class of the span
// whose vertical leg is the dual arrow {(v, 1)} and whose cartesian leg
// is the dual identity at X'.
ArrId double_dual_of_vertical(const DoubleDual& dd, ArrId v);

// The comparison on a cartesian arrow h : X -> X': the class of the span
// whose vertical leg is the dual identity at X and whose cartesian leg is
// the dual arrow {(1, h)}.
ArrId double_dual_of_cartesian(const DoubleDual& dd, ArrId h);

// Builds both duals and the comparison, sending a general arrow f with
// chosen factorization (v, h) to the composite of the two cases above.
// The result does not depend on the factorization.
DoubleDual double_dual_iso(const FibSetup& setup);

}  // namespace fibdual
