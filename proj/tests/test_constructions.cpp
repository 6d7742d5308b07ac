#include <catch2/catch_amalgamated.hpp>

#include "grouplaw/constructions.hpp"
#include "grouplaw/series.hpp"

using namespace grouplaw;

namespace {

ActionSpec w_style_spec() {
  ActionSpec spec;
  spec.gens.push_back(
      GeneratorAction{{1, 0, 0, 0}, linear_action({1, -1, 3, -2}, 9, 9)});
  spec.gens.push_back(
      GeneratorAction{{0, 1, 0, 0}, linear_action({-2, 0, 0, 4}, 9, 9)});
  spec.gens.push_back(
      GeneratorAction{{0, 0, 0, 1}, linear_action({-1, 0, 0, -1}, 9, 9)});
  return spec;
}

}  // namespace

TEST_CASE("action validation") {
  Group n99 = direct_product(cyclic(9), cyclic(9));
  Group k = direct_product(heisenberg3(), cyclic(2));

  SECTION("the W action validates cleanly") {
    CHECK(validate_action(n99, k, w_style_spec()).empty());
  }
  SECTION("identity action validates") {
    ActionSpec spec;
    for (const Elem& g : k.generators())
      spec.gens.push_back(GeneratorAction{g, [](const Elem& e) { return e; }});
    CHECK(validate_action(n99, k, spec).empty());
  }
  SECTION("a non-invertible matrix is flagged") {
    ActionSpec spec = w_style_spec();
    spec.gens[0].act = linear_action({3, 0, 0, 1}, 9, 9);
    auto v = validate_action(n99, k, spec);
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].find("not injective") != std::string::npos);
  }
  SECTION("an action of the wrong order is flagged") {
    Group z7 = cyclic(7);
    Group z2 = cyclic(2);
    ActionSpec spec;
    spec.gens.push_back(GeneratorAction{{1}, [](const Elem& e) -> Elem {
                                          return {static_cast<Scalar>((2 * e[0]) % 7)};
                                        }});
    auto v = validate_action(z7, z2, spec);
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].find("not well-defined") != std::string::npos);
    CHECK_THROWS_AS(semidirect(z7, z2, spec), InvalidActionError);
  }
  SECTION("generators must generate the acting group") {
    Group z9 = cyclic(9);
    Group z4 = cyclic(4);
    ActionSpec spec;
    spec.gens.push_back(GeneratorAction{{2}, [](const Elem& e) { return e; }});
    auto v = validate_action(z9, z4, spec);
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].find("do not generate") != std::string::npos);
  }
  SECTION("maps leaving the carrier are flagged") {
    Group z9 = cyclic(9);
    Group z2 = cyclic(2);
    ActionSpec spec;
    spec.gens.push_back(GeneratorAction{{1}, [](const Elem& e) -> Elem {
                                          return {static_cast<Scalar>(e[0] + 100)};
                                        }});
    CHECK_FALSE(validate_action(z9, z2, spec).empty());
  }
}

TEST_CASE("semidirect products") {
  SECTION("order and normal embedding of N") {
    Group h7 = holomorph_cyclic(7);
    CHECK(h7.order() == 42);
    Subgroup n = semidirect_n_part(h7);
    CHECK(n.order() == 7);
    CHECK(is_normal(h7, n));
    CHECK(quotient(h7, n).quot.order() == 6);
  }
  SECTION("associativity on all triples of a small semidirect product") {
    Group d = dihedral(5);
    REQUIRE(d.order() == 10);
    for (std::size_t i = 0; i < d.order(); ++i)
      for (std::size_t j = 0; j < d.order(); ++j)
        for (std::size_t l = 0; l < d.order(); ++l) {
          Elem a = d.element(i), b = d.element(j), c = d.element(l);
          CHECK(d.mul(d.mul(a, b), c) == d.mul(a, d.mul(b, c)));
        }
    for (std::size_t i = 0; i < d.order(); ++i) {
      Elem a = d.element(i);
      CHECK(d.mul(a, d.inv(a)) == d.identity());
    }
  }
  SECTION("negation action of Z/2 on Z/9 x Z/9") {
    Group n99 = direct_product(cyclic(9), cyclic(9));
    Group z2 = cyclic(2);
    ActionSpec spec;
    spec.gens.push_back(
        GeneratorAction{{1}, linear_action({-1, 0, 0, -1}, 9, 9)});
    Group g = semidirect(n99, z2, spec);
    CHECK(g.order() == 162);
    Subgroup n = semidirect_n_part(g);
    Subgroup t = closure(g, {Elem{0, 0, 1}});
    // [N, Z/2] is all of N: commutators (v, -v-v) sweep out 2N = N.
    Subgroup c = commutator_subgroup(g, n, t);
    CHECK(c.members == n.members);
  }
}

TEST_CASE("holomorphs") {
  CHECK(holomorph_cyclic(2).order() == 2);
  CHECK(holomorph_cyclic(7).order() == 42);
  CHECK(holomorph_cyclic(9).order() == 54);
  CHECK_THROWS_AS(holomorph_cyclic(1), Error);

  Group h9 = holomorph_cyclic(9);
  // Z/9 x| U(9) with U(9) cyclic of order 6
  Subgroup n = semidirect_n_part(h9);
  CHECK(n.order() == 9);
  CHECK(quotient(h9, n).quot.order() == 6);
  CHECK_FALSE(is_nilpotent(h9));
}

TEST_CASE("dihedral groups") {
  CHECK(dihedral(1).order() == 2);
  CHECK(dihedral(6).order() == 12);
  Group d6 = dihedral(6);
  Elem r{1, 0}, s{0, 1};
  CHECK(order_of(d6, r) == 6);
  CHECK(order_of(d6, s) == 2);
  // s r s = r^{-1}
  CHECK(d6.conj(r, s) == d6.inv(r));
}

TEST_CASE("the order-4374 construction") {
  Group w = build_W();
  CHECK(w.order() == 4374);
  CHECK(w.width() == 6);
  CHECK(w.generators().size() == 5);

  Elem xk{0, 0, 1, 0, 0, 0}, tk{0, 0, 0, 0, 0, 1};
  SECTION("the Z/2 part acts centrally on the acting factor") {
    CHECK(w.comm(xk, tk) == w.identity());
  }
  SECTION("the N part is normal of order 81") {
    Subgroup n = semidirect_n_part(w);
    CHECK(n.order() == 81);
    CHECK(is_normal(w, n));
    CHECK(quotient(w, n).quot.order() == 54);
  }
  SECTION("generator action matches the matrices") {
    // x acts on (1,0) by the first column of X
    Elem v{1, 0, 0, 0, 0, 0};
    Elem moved = w.conj(v, w.inv(xk));  // x v x^{-1}
    CHECK(moved == Elem{1, 3, 0, 0, 0, 0});
  }
}
