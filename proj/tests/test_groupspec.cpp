#include <catch2/catch_amalgamated.hpp>

#include "grouplaw/groupspec.hpp"
#include "grouplaw/series.hpp"

using namespace grouplaw;

TEST_CASE("atomic group specs") {
  CHECK(parse_group_spec("Z(9)").order() == 9);
  CHECK(parse_group_spec("Z(9)").descriptor() == "Z(9)");
  CHECK(parse_group_spec("heis3").order() == 27);
  CHECK(parse_group_spec("dih(6)").order() == 12);
  CHECK(parse_group_spec("U(9)").order() == 6);
  CHECK(parse_group_spec("sym(4)").order() == 24);
  CHECK(parse_group_spec("hol(7)").order() == 42);
  CHECK(parse_group_spec("W4374").order() == 4374);
  CHECK(parse_group_spec("  Z(5) ").order() == 5);
}

TEST_CASE("product specs") {
  Group g = parse_group_spec("prod(Z(2), Z(3), Z(5))");
  CHECK(g.order() == 30);
  CHECK(parse_group_spec("prod(heis3, Z(2))").order() == 54);
  CHECK(parse_group_spec("prod(Z(4), prod(Z(2), Z(2)))").order() == 16);
}

TEST_CASE("semidirect spec reproduces the named counterexample") {
  Group w = parse_group_spec(
      "sd(prod(Z(9),Z(9)), prod(heis3,Z(2));"
      " x=[[1,-1],[3,-2]], y=[[-2,0],[0,4]], t=[[-1,0],[0,-1]])");
  CHECK(w.order() == 4374);
  std::vector<Subgroup> ds = derived_series(w);
  REQUIRE(ds.size() == 4);
  CHECK(ds[1].order() == 243);
  CHECK(ds[2].order() == 3);
  CHECK(ds[3].order() == 1);
  CHECK(parse_group_spec("W4374").order() == w.order());
}

TEST_CASE("spec errors carry a position") {
  CHECK_THROWS_AS(parse_group_spec("Q(8)"), SyntaxError);
  CHECK_THROWS_AS(parse_group_spec("Z(9) trailing"), SyntaxError);
  CHECK_THROWS_AS(parse_group_spec("Z()"), SyntaxError);
  CHECK_THROWS_AS(parse_group_spec("prod(Z(2)"), SyntaxError);
  CHECK_THROWS_AS(parse_group_spec(""), SyntaxError);
  // the acted-on factor must be a product of exactly two cyclic groups
  CHECK_THROWS_AS(parse_group_spec("sd(heis3, Z(2); x=[[1,0],[0,1]])"),
                  SyntaxError);
  // one matrix per generator of the acting factor
  CHECK_THROWS_AS(
      parse_group_spec("sd(prod(Z(3),Z(9)), prod(heis3,Z(2));"
                       " x=[[1,0],[0,1]])"),
      SyntaxError);
}
