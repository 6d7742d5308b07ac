#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "grouplaw/errors.hpp"
#include "grouplaw/nq2.hpp"

using namespace grouplaw;

namespace {

const Alphabet kAB("ab");

FreeWord random_ab_word(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> pick(0, 3);
  FreeWord w;
  for (int i = 0; i < len; ++i) {
    switch (pick(rng)) {
      case 0: w.push_back(1); break;
      case 1: w.push_back(-1); break;
      case 2: w.push_back(2); break;
      default: w.push_back(-2); break;
    }
  }
  return free_reduce(w);
}

}  // namespace

TEST_CASE("triple arithmetic matches the collection convention") {
  MalcevTriple a{1, 0, 0}, b{0, 1, 0};
  CHECK(a * b == MalcevTriple{1, 1, 0});
  CHECK(b * a == MalcevTriple{1, 1, -1});  // ba = ab c^{-1}

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int64_t> c(-6, 6);
  auto rand_triple = [&] { return MalcevTriple{c(rng), c(rng), c(rng)}; };
  for (int t = 0; t < 200; ++t) {
    MalcevTriple s = rand_triple(), u = rand_triple(), v = rand_triple();
    CHECK((s * u) * v == s * (u * v));
    CHECK(s * s.inverse() == MalcevTriple{});
    CHECK(s.inverse() * s == MalcevTriple{});
  }
}

TEST_CASE("word evaluation is a homomorphism") {
  std::mt19937 rng(5150);
  for (int t = 0; t < 200; ++t) {
    FreeWord u = random_ab_word(rng, 10);
    FreeWord v = random_ab_word(rng, 10);
    CHECK(nq2_eval(free_concat(u, v), kAB) ==
          nq2_eval(u, kAB) * nq2_eval(v, kAB));
    CHECK(nq2_eval(free_inverse(u), kAB) == nq2_eval(u, kAB).inverse());
  }
}

TEST_CASE("commutator values are bilinear in the exponent sums") {
  CHECK(nq2_eval(parse_free_word("[a^2,b^2]", kAB), kAB) ==
        MalcevTriple{0, 0, 4});
  CHECK(nq2_eval(parse_free_word("[b^3,(ab)^3]", kAB), kAB) ==
        MalcevTriple{0, 0, -9});
  for (int64_t m = 1; m <= 10; ++m) {
    FreeWord w = free_comm(free_pow({1}, m), free_pow({2}, m));
    CHECK(nq2_eval(w, kAB) == MalcevTriple{0, 0, m * m});
  }

  std::mt19937 rng(777);
  for (int t = 0; t < 200; ++t) {
    FreeWord u = random_ab_word(rng, 8);
    FreeWord v = random_ab_word(rng, 8);
    MalcevTriple tu = nq2_eval(u, kAB), tv = nq2_eval(v, kAB);
    CHECK(nq2_eval(free_comm(u, v), kAB) ==
          MalcevTriple{0, 0, tu.alpha * tv.beta - tu.beta * tv.alpha});
  }
}

TEST_CASE("weight three commutators vanish") {
  std::mt19937 rng(31337);
  for (int t = 0; t < 200; ++t) {
    FreeWord u = random_ab_word(rng, 6);
    FreeWord v = random_ab_word(rng, 6);
    FreeWord w = random_ab_word(rng, 6);
    CHECK(nq2_eval(free_comm(free_comm(u, v), w), kAB) == MalcevTriple{});
    CHECK(nq2_eval(free_comm(w, free_comm(u, v)), kAB) == MalcevTriple{});
  }
}

TEST_CASE("unsupported letters are rejected") {
  Alphabet abx("abx");
  CHECK_THROWS_AS(nq2_eval(parse_free_word("ax", abx), abx),
                  UnsupportedAlphabetError);
  CHECK(nq2_eval(parse_free_word("ab", abx), abx) == MalcevTriple{1, 1, 0});
}

TEST_CASE("order of the commutator in the class two quotient") {
  CHECK(nq2_quotient_c_order({}, kAB) == 0);
  CHECK(nq2_quotient_c_order({parse_free_word("[a,b]", kAB)}, kAB) == 1);

  auto relator_family = [&](int64_t m) {
    std::vector<FreeWord> rel;
    FreeWord am = free_pow({1}, m), bm = free_pow({2}, m);
    FreeWord abm = free_pow({1, 2}, m);
    rel.push_back(free_comm(am, bm));
    rel.push_back(free_comm(am, abm));
    rel.push_back(free_comm(bm, abm));
    return rel;
  };

  SECTION("one modulus alone leaves c of order m squared") {
    CHECK(nq2_quotient_c_order(relator_family(2), kAB) == 4);
    CHECK(nq2_quotient_c_order(relator_family(3), kAB) == 9);
  }
  SECTION("coprime moduli together kill c") {
    for (auto [m, n] : {std::pair<int64_t, int64_t>{2, 3}, {3, 4}, {4, 9}}) {
      std::vector<FreeWord> rel = relator_family(m);
      for (FreeWord& r : relator_family(n)) rel.push_back(r);
      CHECK(nq2_quotient_c_order(rel, kAB) == 1);
    }
    std::vector<FreeWord> rel = relator_family(2);
    for (FreeWord& r : relator_family(4)) rel.push_back(r);
    CHECK(nq2_quotient_c_order(rel, kAB) == 4);  // gcd(4, 16), not coprime
  }
  SECTION("non-central relators are rejected") {
    CHECK_THROWS_AS(nq2_quotient_c_order({FreeWord{1}}, kAB), NotCentralError);
    CHECK_THROWS_AS(
        nq2_quotient_c_order({parse_free_word("[a,b]a", kAB)}, kAB),
        NotCentralError);
  }
}
