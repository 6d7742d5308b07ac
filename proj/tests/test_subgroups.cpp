#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <vector>

#include "grouplaw/constructions.hpp"
#include "grouplaw/subgroups.hpp"

using namespace grouplaw;

namespace {

// Naive fixed-point closure, used as an oracle for the BFS version.
std::vector<int> closure_oracle(const Group& g, const std::vector<Elem>& seed) {
  std::set<int> ids{g.index_of(g.identity())};
  for (const Elem& s : seed) ids.insert(g.index_of(s));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(ids.begin(), ids.end());
    for (int a : cur)
      for (int b : cur) {
        int p = g.index_of(
            g.mul(g.element(static_cast<std::size_t>(a)), g.element(static_cast<std::size_t>(b))));
        if (ids.insert(p).second) grew = true;
      }
    for (int a : cur) {
      int p = g.index_of(g.inv(g.element(static_cast<std::size_t>(a))));
      if (ids.insert(p).second) grew = true;
    }
  }
  return {ids.begin(), ids.end()};
}

// All commutators [a, b] over full member lists, then closed.  This is the
// definitional version of the commutator subgroup.
std::vector<int> commutator_oracle(const Group& g, const Subgroup& a,
                                   const Subgroup& b) {
  std::vector<Elem> comms;
  for (int ia : a.members)
    for (int ib : b.members)
      comms.push_back(g.comm(g.element(static_cast<std::size_t>(ia)),
                             g.element(static_cast<std::size_t>(ib))));
  return closure_oracle(g, comms);
}

}  // namespace

TEST_CASE("closure matches the naive fixed-point oracle") {
  Group s4 = symmetric_group(4);
  std::vector<std::vector<Elem>> seeds = {
      {},
      {Elem{1, 0, 2, 3}},
      {Elem{1, 2, 0, 3}},
      {Elem{1, 0, 2, 3}, Elem{0, 2, 1, 3}},
      {Elem{1, 2, 3, 0}},
      {Elem{1, 2, 3, 0}, Elem{1, 0, 2, 3}},
  };
  for (const auto& seed : seeds) {
    Subgroup h = closure(s4, seed);
    CHECK(h.members == closure_oracle(s4, seed));
  }
}

TEST_CASE("closure stores a generating set that regenerates the subgroup") {
  Group g = direct_product(cyclic(4), cyclic(6));
  std::vector<Elem> all;
  for (std::size_t i = 0; i < g.order(); ++i) all.push_back(g.element(i));
  Subgroup h = closure(g, all);
  CHECK(h.order() == 24);
  CHECK(h.gens.size() <= 2);
  CHECK(closure(g, h.gens).members == h.members);
}

TEST_CASE("closure rejects foreign elements") {
  Group z4 = cyclic(4);
  CHECK_THROWS_AS(closure(z4, {Elem{7}}), Error);
}

TEST_CASE("power subgroups of cyclic groups") {
  Group z12 = cyclic(12);
  CHECK(power_subgroup(z12, 2).order() == 6);
  CHECK(power_subgroup(z12, 3).order() == 4);
  CHECK(power_subgroup(z12, 4).order() == 3);
  CHECK(power_subgroup(z12, 5).order() == 12);
  CHECK(power_subgroup(z12, 1).order() == 12);
  CHECK_THROWS_AS(power_subgroup(z12, 0), Error);
}

TEST_CASE("power subgroup of a nested subgroup") {
  Group z12 = cyclic(12);
  Subgroup evens = closure(z12, {Elem{2}});
  Subgroup h = power_subgroup(z12, evens, 2);
  CHECK(h.order() == 3);  // <4> inside Z/12
  CHECK(h.contains({4}));
}

TEST_CASE("commutator subgroup matches the all-pairs oracle") {
  std::vector<Group> groups = {symmetric_group(3), symmetric_group(4),
                               heisenberg3(), dihedral(6),
                               direct_product(cyclic(3), cyclic(5))};
  for (const Group& g : groups) {
    Subgroup whole = whole_subgroup(g);
    Subgroup d = commutator_subgroup(g, whole, whole);
    CHECK(d.members == commutator_oracle(g, whole, whole));
  }
}

TEST_CASE("mixed commutator subgroups agree with the oracle") {
  Group s4 = symmetric_group(4);
  Subgroup a = closure(s4, {Elem{1, 2, 3, 0}});            // <4-cycle>
  Subgroup b = closure(s4, {Elem{1, 0, 2, 3}});            // <transposition>
  Subgroup ab = commutator_subgroup(s4, a, b);
  CHECK(ab.members == commutator_oracle(s4, a, b));

  Group d6 = dihedral(6);
  Subgroup rot = closure(d6, {Elem{1, 0}});
  Subgroup refl = closure(d6, {Elem{0, 1}});
  CHECK(commutator_subgroup(d6, rot, refl).members ==
        commutator_oracle(d6, rot, refl));
}

TEST_CASE("commutator with trivial factor is trivial") {
  Group s3 = symmetric_group(3);
  Subgroup t = trivial_subgroup(s3);
  CHECK(commutator_subgroup(s3, whole_subgroup(s3), t).order() == 1);
}

TEST_CASE("normality") {
  Group s3 = symmetric_group(3);
  Subgroup a3 = closure(s3, {Elem{1, 2, 0}});
  Subgroup flip = closure(s3, {Elem{1, 0, 2}});
  CHECK(is_normal(s3, a3));
  CHECK_FALSE(is_normal(s3, flip));
  CHECK(normal_closure(s3, {Elem{1, 0, 2}}).order() == 6);
}

TEST_CASE("quotients") {
  SECTION("cyclic quotient") {
    Group z12 = cyclic(12);
    Subgroup n = closure(z12, {Elem{4}});
    QuotientMap q = quotient(z12, n);
    CHECK(q.quot.order() == 4);
    CHECK(q({5}) == q({9}));
    CHECK(q({5}) != q({6}));
  }
  SECTION("projection is a homomorphism") {
    Group d6 = dihedral(6);
    Subgroup n = closure(d6, {Elem{2, 0}});
    REQUIRE(is_normal(d6, n));
    QuotientMap q = quotient(d6, n);
    CHECK(q.quot.order() == 4);
    for (std::size_t i = 0; i < d6.order(); ++i)
      for (std::size_t j = 0; j < d6.order(); ++j) {
        Elem a = d6.element(i), b = d6.element(j);
        CHECK(q.quot.mul(q(a), q(b)) == q(d6.mul(a, b)));
      }
  }
  SECTION("quotient group satisfies the axioms") {
    Group s4 = symmetric_group(4);
    Subgroup v4 = closure(s4, {Elem{1, 0, 3, 2}, Elem{2, 3, 0, 1}});
    REQUIRE(is_normal(s4, v4));
    QuotientMap q = quotient(s4, v4);
    CHECK(q.quot.order() == 6);
    for (std::size_t i = 0; i < q.quot.order(); ++i) {
      Elem a = q.quot.element(i);
      CHECK(q.quot.mul(a, q.quot.inv(a)) == q.quot.identity());
      for (std::size_t j = 0; j < q.quot.order(); ++j)
        for (std::size_t k = 0; k < q.quot.order(); ++k) {
          Elem b = q.quot.element(j), c = q.quot.element(k);
          CHECK(q.quot.mul(q.quot.mul(a, b), c) == q.quot.mul(a, q.quot.mul(b, c)));
        }
    }
  }
  SECTION("non-normal subgroup is rejected") {
    Group s3 = symmetric_group(3);
    Subgroup flip = closure(s3, {Elem{1, 0, 2}});
    CHECK_THROWS_AS(quotient(s3, flip), NotNormalError);
  }
}

TEST_CASE("subgroup handles behave as groups") {
  Group s4 = symmetric_group(4);
  Subgroup a4 = commutator_subgroup(s4, whole_subgroup(s4), whole_subgroup(s4));
  Group a4g = a4.as_group();
  CHECK(a4g.order() == 12);
  CHECK(a4g.identity() == s4.identity());
  Subgroup v4 = commutator_subgroup(a4g, whole_subgroup(a4g), whole_subgroup(a4g));
  CHECK(v4.order() == 4);
}
