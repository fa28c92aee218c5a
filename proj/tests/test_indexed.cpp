#include <vector>

#include "doctest.h"
#include "oracle.hpp"

#include "fibdual/category.hpp"
#include "fibdual/dual.hpp"
#include "fibdual/fibration.hpp"
#include "fibdual/gen.hpp"
#include "fibdual/indexed.hpp"
#include "fibdual/iso.hpp"

using namespace fibdual;

TEST_CASE("indexed validation flags the contravariant laws") {
  SUBCASE("shape") {
    IndexedCat ix = indexed_swap_action();
    ix.reindex.pop_back();
    CHECK(validate_indexed(ix).has_rule("indexed-shape"));
  }
  SUBCASE("reindex must be a functor") {
    IndexedCat ix = indexed_collapse_to_point();
    // Send the terminal object to the bottom but its identity to the top.
    ix.reindex[2].obj_map = {0};
    ix.reindex[2].arr_map = {1};
    CHECK(validate_indexed(ix).has_rule("indexed-reindex-functor"));
  }
  SUBCASE("identity arrows must reindex identically") {
    IndexedCat ix = indexed_swap_action();
    ix.reindex[0] = ix.reindex[1];
    CHECK(validate_indexed(ix).has_rule("indexed-identity"));
  }
  SUBCASE("composition must reverse") {
    // Collapse both points onto one: a valid functor, but then s.s = e
    // would have to collapse as well, and e must stay the identity.
    IndexedCat bad = indexed_swap_action();
    bad.reindex[1].obj_map = {0, 0};
    bad.reindex[1].arr_map = {0, 0};
    CHECK(validate_indexed(bad).has_rule("indexed-composition"));
  }
}

TEST_CASE("glued swap action is the two object action groupoid") {
  const Grothendieck g = grothendieck(indexed_swap_action());
  CHECK(g.setup.total().object_count() == 2);
  CHECK(g.setup.total().arrow_count() == 4);
  CHECK(is_fibration(g.setup).is_fibration());
  // Every arrow is cartesian: the fibres are discrete and the action is
  // invertible.
  for (ArrId f = 0; f < 4; ++f) CHECK(g.setup.is_cartesian(f));
}

TEST_CASE("glued inversion action is the symmetric group on three letters") {
  const Grothendieck g = grothendieck(indexed_inversion_action());
  CHECK(g.setup.total().object_count() == 1);
  CHECK(g.setup.total().arrow_count() == 6);
  const auto iso = find_category_iso(g.setup.total_ptr(), symmetric3_group());
  REQUIRE(iso.has_value());
  CHECK(validate_iso(*iso).ok());
}

TEST_CASE("glued collapse runs the interval into the point fibre") {
  const Grothendieck g = grothendieck(indexed_collapse_to_point());
  // Objects: two in the interval fibre, one in the terminal fibre.
  CHECK(g.setup.total().object_count() == 3);
  // Identities, the interval fibre arrow, and one arrow over the step
  // from each source object.
  CHECK(g.setup.total().arrow_count() == 6);
  CHECK(is_fibration(g.setup).is_fibration());
}

TEST_CASE("glued objects and arrows are indexed lexicographically") {
  const Grothendieck g = grothendieck(indexed_swap_action());
  for (std::size_t i = 0; i < g.objects.size(); ++i) {
    const auto [a, x] = g.objects[i];
    CHECK(g.object_id(a, x) == static_cast<ObjId>(i));
    CHECK(g.setup.over_object(static_cast<ObjId>(i)) == a);
  }
  for (std::size_t i = 0; i < g.arrows.size(); ++i) {
    const GluedArrow& f = g.arrows[i];
    CHECK(g.arrow_id(f.base, f.fibre_arrow, f.target_obj) ==
          static_cast<ArrId>(i));
    CHECK(g.setup.over_arrow(static_cast<ArrId>(i)) == f.base);
  }
  CHECK_THROWS_AS(g.object_id(7, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.arrow_id(0, 5, 0), std::invalid_argument);
}

TEST_CASE("triangle arrows are cartesian lifts ending at their object") {
  for (const IndexedKind kind :
       {IndexedKind::ConstantTerminal, IndexedKind::ConstantInterval,
        IndexedKind::SwapAction, IndexedKind::CollapseToPoint,
        IndexedKind::InversionAction}) {
    const Grothendieck g = grothendieck(gen_indexed(kind));
    const FinCategory& base = *g.input.base;
    for (ArrId alpha = 0; alpha < base.arrow_count(); ++alpha) {
      const ObjId b = base.tgt(alpha);
      for (ObjId y = 0; y < g.input.fibres[b]->object_count(); ++y) {
        const ArrId t = triangle_arrow(g, alpha, y);
        CHECK(g.setup.over_arrow(t) == alpha);
        CHECK(g.setup.total().tgt(t) == g.object_id(b, y));
        CHECK(g.setup.is_cartesian(t));
      }
    }
  }
}

TEST_CASE("glueing validates its input") {
  IndexedCat broken = indexed_swap_action();
  broken.reindex[1].arr_map = {0, 1};
  CHECK_THROWS_AS(grothendieck(broken), std::invalid_argument);
}

TEST_CASE("dualizing an indexed category flips every fibre") {
  for (const IndexedKind kind :
       {IndexedKind::ConstantInterval, IndexedKind::SwapAction,
        IndexedKind::CollapseToPoint, IndexedKind::InversionAction}) {
    const IndexedCat ix = gen_indexed(kind);
    const IndexedCat op = dualize_indexed(ix);
    CHECK(validate_indexed(op).ok());
    for (std::size_t a = 0; a < ix.fibres.size(); ++a) {
      CHECK(*op.fibres[a] == opposite(*ix.fibres[a]));
    }
    // Reindexing maps are carried over unchanged.
    for (std::size_t alpha = 0; alpha < ix.reindex.size(); ++alpha) {
      CHECK(op.reindex[alpha].arr_map == ix.reindex[alpha].arr_map);
      CHECK(op.reindex[alpha].obj_map == ix.reindex[alpha].obj_map);
    }
  }
}

TEST_CASE("the dual of a glued fibration is glueing the opposite fibres") {
  for (const IndexedKind kind :
       {IndexedKind::ConstantTerminal, IndexedKind::ConstantInterval,
        IndexedKind::SwapAction, IndexedKind::CollapseToPoint,
        IndexedKind::InversionAction}) {
    const DualAgreement da = check_dual_agreement(gen_indexed(kind));
    CHECK(validate_iso(da.iso).ok());
    CHECK(da.glued_op.setup.total().arrow_count() ==
          static_cast<ArrId>(da.dual.classes.size()));
    // The comparison commutes with the projections to the base.
    for (ArrId f = 0; f < da.glued_op.setup.total().arrow_count(); ++f) {
      CHECK(da.glued_op.setup.over_arrow(f) ==
            da.dual.dual.over_arrow(da.iso.fwd.arr_map[f]));
    }
  }
}
