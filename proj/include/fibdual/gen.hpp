#pragma once

#include <string>
#include <vector>

#include "fibdual/indexed.hpp"

namespace fibdual {

// A monoid presented by its full multiplication table, as a one-object
// category. mult[f][g] is f then g; unit is the identity arrow.
FinCategory one_object_category(const std::vector<std::vector<ArrId>>& mult,
                                ArrId unit);

// Addition mod n; arrow k is the residue k, unit 0.
std::vector<std::vector<ArrId>> cyclic_table(int n);

// Permutations of three points in lex one-line order, so 0 is the
// identity, {0, 3, 4} are even and {1, 2, 5} are odd. Entry [g][h] is
// "apply g, then h".
std::vector<std::vector<ArrId>> symmetric3_table();

// Two elements {1, e} with e idempotent and not invertible.
std::vector<std::vector<ArrId>> idempotent_monoid_table();

CatPtr terminal_category();
CatPtr discrete_category(ObjId n);
// Two objects 0 and 1, identities 0 and 1, one arrow 2 : 0 -> 1.
CatPtr interval_category();
CatPtr cyclic_group(int n);
CatPtr symmetric3_group();
CatPtr idempotent_monoid();

// A functor between one-object categories given arrow by arrow; the
// returned setup's constructor rejects non-homomorphisms.
FibSetup gen_group_hom(CatPtr total, CatPtr base, std::vector<ArrId> image);

// Projection of the product category onto its left factor. Pair ids:
// object (x, u) is x * right objects + u, arrow (f, g) is
// f * right arrows + g.
FibSetup gen_product(CatPtr left, CatPtr right);

ObjId product_object_id(const FinCategory& right, ObjId x, ObjId u);
ArrId product_arrow_id(const FinCategory& right, ArrId f, ArrId g);

// A single total object sitting over the source end of the interval; the
// fibre over the other end is empty, which is still a fibration.
FibSetup empty_fibre_setup();

// Relabels the total category and transports the projection; the result
// is the same setup with scrambled total ids.
FibSetup relabel_total(const FibSetup& setup,
                       const std::vector<ObjId>& obj_perm,
                       const std::vector<ArrId>& arr_perm);

// Every fibre the same category, every reindex the identity.
IndexedCat indexed_constant(CatPtr base, CatPtr fib);

// The two-element group acting on two points by swapping them.
IndexedCat indexed_swap_action();

// Over the interval: an interval fibre shrinking to a point, the point
// pulled back to the top end.
IndexedCat indexed_collapse_to_point();

// The two-element group acting on the cyclic group of order three by
// inversion; the glued category is the symmetric group on three points.
IndexedCat indexed_inversion_action();

enum class IndexedKind {
  ConstantTerminal,
  ConstantInterval,
  SwapAction,
  CollapseToPoint,
  InversionAction,
};

IndexedCat gen_indexed(IndexedKind kind);

// A functor that fails to be a fibration, with the first (base arrow,
// total object) pair that has no cartesian lift.
struct NonFibration {
  FibSetup setup;
  ArrId missing_base_arrow;
  ObjId missing_over;
};

// The two-element group inside the cyclic group of order four, doubling
// the generator: the odd base arrows have no lift at all.
NonFibration non_fibration_narrow_image();

// Two disconnected points over the interval: nothing lifts the crossing
// arrow into the far point.
NonFibration non_fibration_severed_interval();

enum class NonFibrationKind { NarrowImage, SeveredInterval };

NonFibration gen_non_fibration(NonFibrationKind kind);

struct CorpusEntry {
  std::string name;
  FibSetup setup;
};

// Named fibrations of distinct shapes, used across the test suite. Every
// entry really is a fibration; non-fibrations live behind
// gen_non_fibration only.
std::vector<CorpusEntry> standard_corpus();

}  // namespace fibdual
