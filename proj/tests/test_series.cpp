#include <catch2/catch_amalgamated.hpp>

#include "grouplaw/constructions.hpp"
#include "grouplaw/series.hpp"

using namespace grouplaw;

TEST_CASE("derived series of small groups") {
  SECTION("abelian groups have derived length <= 1") {
    CHECK(derived_length(cyclic(1)) == 0);
    CHECK(derived_length(cyclic(7)) == 1);
    CHECK(derived_length(direct_product(cyclic(4), cyclic(6))) == 1);
  }
  SECTION("sym(3): whole, alternating, trivial") {
    auto ds = derived_series(symmetric_group(3));
    REQUIRE(ds.size() == 3);
    CHECK(ds[0].order() == 6);
    CHECK(ds[1].order() == 3);
    CHECK(ds[2].order() == 1);
    CHECK(derived_length(symmetric_group(3)) == 2);
  }
  SECTION("sym(4) has derived length 3") {
    auto ds = derived_series(symmetric_group(4));
    REQUIRE(ds.size() == 4);
    CHECK(ds[1].order() == 12);
    CHECK(ds[2].order() == 4);
    CHECK(derived_length(symmetric_group(4)) == 3);
  }
  SECTION("heis3 is metabelian") {
    CHECK(derived_length(heisenberg3()) == 2);
  }
  SECTION("sym(5) is not solvable") {
    CHECK_FALSE(is_solvable(symmetric_group(5)));
    CHECK_THROWS_AS(derived_length(symmetric_group(5)), NotSolvableError);
  }
}

TEST_CASE("lower central series and nilpotency class") {
  SECTION("heis3 has class 2") {
    auto lcs = lower_central_series(heisenberg3());
    REQUIRE(lcs.size() == 3);
    CHECK(lcs[1].order() == 3);
    CHECK(nilpotency_class(heisenberg3()) == 2);
  }
  SECTION("abelian groups have class <= 1") {
    CHECK(nilpotency_class(cyclic(9)) == 1);
    CHECK(nilpotency_class(cyclic(1)) == 0);
  }
  SECTION("dihedral groups of 2-power order are nilpotent") {
    CHECK(nilpotency_class(dihedral(2)) == 1);
    CHECK(nilpotency_class(dihedral(4)) == 2);
    CHECK(nilpotency_class(dihedral(8)) == 3);
  }
  SECTION("sym(3) is not nilpotent") {
    CHECK_FALSE(is_nilpotent(symmetric_group(3)));
    CHECK_THROWS_AS(nilpotency_class(symmetric_group(3)), NotNilpotentError);
  }
  SECTION("nilpotent implies solvable with dl <= class") {
    for (int64_t n : {2, 4, 8}) {
      Group d = dihedral(n);
      CHECK(derived_length(d) <= nilpotency_class(d) + 1);
    }
  }
}

TEST_CASE("exponent") {
  CHECK(exponent(cyclic(12)) == 12);
  CHECK(exponent(direct_product(cyclic(4), cyclic(6))) == 12);
  CHECK(exponent(heisenberg3()) == 3);
  CHECK(exponent(symmetric_group(3)) == 6);
  CHECK(exponent(symmetric_group(4)) == 12);
  CHECK(exponent(cyclic(1)) == 1);
}

TEST_CASE("centralizer and center") {
  Group h = heisenberg3();
  SECTION("center of heis3 is the commutator line") {
    Subgroup z = center(h);
    CHECK(z.order() == 3);
    CHECK(z.contains({0, 0, 1}));
  }
  SECTION("centralizer of a generator") {
    Subgroup c = centralizer(h, {Elem{1, 0, 0}});
    CHECK(c.order() == 9);
    CHECK(c.contains({1, 0, 0}));
    CHECK(c.contains({0, 0, 1}));
    CHECK_FALSE(c.contains({0, 1, 0}));
  }
  SECTION("center of sym(3) is trivial") {
    CHECK(center(symmetric_group(3)).order() == 1);
  }
  SECTION("centralizer of the empty set is everything") {
    CHECK(centralizer(h, {}).order() == 27);
  }
}
