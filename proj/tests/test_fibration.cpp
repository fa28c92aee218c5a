#include <vector>

#include "doctest.h"
#include "oracle.hpp"

#include "fibdual/category.hpp"
#include "fibdual/fibration.hpp"
#include "fibdual/gen.hpp"
#include "fibdual/iso.hpp"

using namespace fibdual;

namespace {

FibSetup sign_setup() {
  return gen_group_hom(symmetric3_group(), cyclic_group(2),
                       {0, 1, 1, 0, 0, 1});
}

}  // namespace

TEST_CASE("setup construction rejects non-functors with a report") {
  const CatPtr z4 = cyclic_group(4);
  const CatPtr z2 = cyclic_group(2);
  CHECK_THROWS_AS(FibSetup({z4, z2, {0}, {0, 1, 1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(FibSetup({z4, z2, {0}, {0, 1}}),
                       doctest::Contains("functor-shape"),
                       std::invalid_argument);
}

TEST_CASE("verticals of the sign map are exactly the even permutations") {
  const FibSetup sign = sign_setup();
  for (ArrId g = 0; g < 6; ++g) {
    CHECK(sign.is_vertical(g) == (oracle::perm3_parity(g) == 0));
    // Every arrow of a group homomorphism is invertible, hence cartesian.
    CHECK(sign.is_cartesian(g));
  }
  CHECK(sign.vertical_arrows().size() == 3);
  CHECK(sign.cartesian_arrows().size() == 6);
}

TEST_CASE("product fibres separate cartesian from merely vertical") {
  // Over the interval with fibre the two element group every second
  // component is invertible, so every arrow is cartesian.
  const FibSetup group_fibre = gen_product(interval_category(),
                                           cyclic_group(2));
  for (ArrId f = 0; f < group_fibre.total().arrow_count(); ++f) {
    CHECK(group_fibre.is_cartesian(f));
  }

  // With the idempotent monoid fibre the absorbing element kills
  // injectivity of post-composition, so only identity second components
  // are cartesian.
  const CatPtr mon = idempotent_monoid();
  const FibSetup mon_fibre = gen_product(interval_category(), mon);
  for (ArrId f = 0; f < 3; ++f) {
    for (ArrId g = 0; g < 2; ++g) {
      const ArrId t = product_arrow_id(*mon, f, g);
      CHECK(mon_fibre.is_cartesian(t) == (g == 0));
      CHECK(mon_fibre.is_vertical(t) == (f == 0 || f == 1));
    }
  }
}

TEST_CASE("hom over a base arrow partitions the hom set") {
  const FibSetup sign = sign_setup();
  const auto over_even = sign.hom_over(0, 0, 0);
  const auto over_odd = sign.hom_over(0, 0, 1);
  CHECK(over_even.size() == 3);
  CHECK(over_odd.size() == 3);
  for (ArrId g : over_even) CHECK(oracle::perm3_parity(g) == 0);
  for (ArrId g : over_odd) CHECK(oracle::perm3_parity(g) == 1);
}

TEST_CASE("smallest lift is the least cartesian arrow over the base arrow") {
  const FibSetup sign = sign_setup();
  CHECK(sign.smallest_lift(0, 0) == 0);
  CHECK(sign.smallest_lift(1, 0) == 1);
  const auto lifts = sign.cartesian_lifts(1, 0);
  REQUIRE(lifts.size() == 3);
  CHECK(lifts.front() == 1);
  for (ArrId h : lifts) CHECK(oracle::perm3_parity(h) == 1);
}

TEST_CASE("every corpus setup is a fibration") {
  for (const CorpusEntry& entry : standard_corpus()) {
    INFO(entry.name);
    CHECK(is_fibration(entry.setup).is_fibration());
  }
}

TEST_CASE("fibration check returns the first missing lift in scan order") {
  const NonFibration narrow = gen_non_fibration(NonFibrationKind::NarrowImage);
  const FibrationCheck check = is_fibration(narrow.setup);
  REQUIRE(check.counterexample.has_value());
  CHECK(check.counterexample->first == 1);
  CHECK(check.counterexample->second == 0);
}

TEST_CASE("sign fibre over the point is the cyclic group of even permutations") {
  const FibSetup sign = sign_setup();
  const Fibre fib = fibre(sign, 0);
  CHECK(fib.category->object_count() == 1);
  CHECK(fib.category->arrow_count() == 3);
  // Embedded arrows are the even permutations in ascending order.
  std::vector<ArrId> evens;
  for (ArrId g = 0; g < 6; ++g) {
    if (oracle::perm3_parity(g) == 0) evens.push_back(g);
  }
  CHECK(fib.embedding.arr_map == evens);
  // The compacted table composes exactly as the embedded permutations do.
  for (ArrId i = 0; i < 3; ++i) {
    for (ArrId j = 0; j < 3; ++j) {
      const int expected = oracle::perm3_compose(evens[i], evens[j]);
      CHECK(fib.embedding.arr_map[fib.category->compose(i, j)] == expected);
    }
  }
  CHECK(find_category_iso(fib.category, cyclic_group(3)).has_value());
  CHECK(validate_functor(fib.embedding).ok());
}

TEST_CASE("fibres of a product are the right factor") {
  const FibSetup p = gen_product(interval_category(), cyclic_group(2));
  for (ObjId a = 0; a < 2; ++a) {
    const Fibre fib = fibre(p, a);
    CHECK(*fib.category == *cyclic_group(2));
  }
}

TEST_CASE("empty fibre has no objects and no arrows") {
  const FibSetup e = empty_fibre_setup();
  const Fibre fib = fibre(e, 1);
  CHECK(fib.category->object_count() == 0);
  CHECK(fib.category->arrow_count() == 0);
}

TEST_CASE("identity arrows are always cartesian lifts of base identities") {
  for (const CorpusEntry& entry : standard_corpus()) {
    INFO(entry.name);
    const FibSetup& s = entry.setup;
    for (ObjId x = 0; x < s.total().object_count(); ++x) {
      const ArrId id = s.total().identity(x);
      CHECK(s.is_vertical(id));
      CHECK(s.is_cartesian(id));
    }
  }
}

TEST_CASE("cartesian lifts end where they are asked to") {
  for (const CorpusEntry& entry : standard_corpus()) {
    INFO(entry.name);
    const FibSetup& s = entry.setup;
    for (ArrId alpha = 0; alpha < s.base().arrow_count(); ++alpha) {
      for (ObjId y : s.objects_over(s.base().tgt(alpha))) {
        const ArrId h = s.smallest_lift(alpha, y);
        CHECK(s.total().tgt(h) == y);
        CHECK(s.over_arrow(h) == alpha);
        CHECK(s.is_cartesian(h));
        const auto lifts = s.cartesian_lifts(alpha, y);
        CHECK(!lifts.empty());
        CHECK(lifts.front() == h);
      }
    }
  }
}

TEST_CASE("missing lift error carries the witness") {
  const NonFibration bad =
      gen_non_fibration(NonFibrationKind::SeveredInterval);
  try {
    bad.setup.smallest_lift(bad.missing_base_arrow, bad.missing_over);
    FAIL("expected a missing lift");
  } catch (const NotAFibrationError& e) {
    CHECK(e.base_arrow() == bad.missing_base_arrow);
    CHECK(e.target() == bad.missing_over);
  }
}
