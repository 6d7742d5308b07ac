#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "grouplaw/constructions.hpp"
#include "grouplaw/law.hpp"

using namespace grouplaw;

TEST_CASE("law parsing") {
  SECTION("commutator of two variables") {
    Law w = parse_law("[x,y]");
    CHECK(w->kind == LawNode::Kind::Comm);
    CHECK(arity(w) == 2);
    CHECK(law_equal(w, law_comm(law_var(1), law_var(2))));
  }
  SECTION("x and y alias x1 and x2") {
    CHECK(law_equal(parse_law("[x1,x2]"), parse_law("[x,y]")));
  }
  SECTION("the four-variable metabelian law") {
    Law w = parse_law("[[x1,x2],[x3,x4]]");
    CHECK(arity(w) == 4);
    CHECK(law_equal(w, metabelian_word()));
  }
  SECTION("numeric exponent is a power, word exponent a conjugation") {
    Law w = parse_law("[x^2,x^y]");
    REQUIRE(w->kind == LawNode::Kind::Comm);
    CHECK(w->kids[0]->kind == LawNode::Kind::Power);
    CHECK(w->kids[0]->exp == 2);
    CHECK(w->kids[1]->kind == LawNode::Kind::Conj);
  }
  SECTION("negative powers and juxtaposition") {
    Law w = parse_law("x^-1y^2(xy)^3");
    REQUIRE(w->kind == LawNode::Kind::Product);
    CHECK(w->kids.size() == 3);
    CHECK(w->kids[0]->exp == -1);
  }
  SECTION("empty word spelling") {
    CHECK(parse_law("1")->kind == LawNode::Kind::One);
    CHECK(arity(parse_law("1")) == 0);
  }
  SECTION("whitespace is ignored") {
    CHECK(law_equal(parse_law(" [ x , y ] "), parse_law("[x,y]")));
  }
}

TEST_CASE("law parse errors carry positions") {
  auto pos_of = [](const std::string& text) -> std::size_t {
    try {
      parse_law(text);
    } catch (const SyntaxError& e) {
      return e.pos;
    }
    FAIL("expected SyntaxError for: " << text);
    return static_cast<std::size_t>(-1);
  };
  CHECK(pos_of("") == 0);
  CHECK(pos_of("z") == 0);
  CHECK(pos_of("[x,y") == 4);
  CHECK(pos_of("x^") == 2);
  CHECK(pos_of("x0") == 1);
  CHECK(pos_of("(xy") == 3);
  CHECK(pos_of("x^2^3") == 3);
  CHECK(pos_of("[x;y]") == 2);
}

TEST_CASE("printing is the inverse of parsing") {
  SECTION("normal-form strings round trip") {
    for (const std::string s :
         {"[x,y]", "[[x,y],[x3,x4]]", "[x^2,x^y]", "x^-1y^2", "[[x^2,y^2]^3,y^3]",
          "xyx3", "x^(yx)", "[x,y]^2", "1", "(xy)^3x", "x3(1)"}) {
      CHECK(print_law(parse_law(s)) == s);
    }
  }
  SECTION("random trees round trip through text") {
    std::mt19937 rng(20240817);
    std::function<Law(int)> gen = [&](int depth) -> Law {
      int pick = depth <= 0 ? static_cast<int>(rng() % 2)
                            : static_cast<int>(rng() % 6);
      switch (pick) {
        case 0:
          return law_var(static_cast<int>(rng() % 4) + 1);
        case 1:
          return law_one();
        case 2: {
          std::vector<Law> kids;
          std::size_t k = 2 + rng() % 2;
          for (std::size_t i = 0; i < k; ++i) kids.push_back(gen(depth - 1));
          return law_product(std::move(kids));
        }
        case 3:
          return law_power(gen(depth - 1),
                           static_cast<int64_t>(rng() % 7) - 3);
        case 4:
          return law_conj(gen(depth - 1), gen(depth - 1));
        default:
          return law_comm(gen(depth - 1), gen(depth - 1));
      }
    };
    for (int trial = 0; trial < 200; ++trial) {
      Law t = gen(3);
      Law back = parse_law(print_law(t));
      CHECK(law_equal(t, back));
    }
  }
}

TEST_CASE("law evaluation") {
  Group h = heisenberg3();
  Elem x{1, 0, 0}, y{0, 1, 0};

  SECTION("commutator law at a commuting pair is trivial") {
    Group z6 = cyclic(6);
    CHECK(evaluate(parse_law("[x,y]"), z6, {{2}, {5}}) == z6.identity());
  }
  SECTION("arity violations throw") {
    CHECK_THROWS_AS(evaluate(parse_law("[x,x3]"), h, {x, y}),
                    ArityMismatchError);
  }
  SECTION("evaluation is homomorphic on random trees") {
    std::mt19937 rng(993);
    std::function<Law(int)> gen = [&](int depth) -> Law {
      int pick = depth <= 0 ? 0 : static_cast<int>(rng() % 6);
      switch (pick) {
        case 0:
          return law_var(static_cast<int>(rng() % 2) + 1);
        case 1:
          return law_one();
        case 2:
          return law_product({gen(depth - 1), gen(depth - 1)});
        case 3:
          return law_power(gen(depth - 1), static_cast<int64_t>(rng() % 5) - 2);
        case 4:
          return law_conj(gen(depth - 1), gen(depth - 1));
        default:
          return law_comm(gen(depth - 1), gen(depth - 1));
      }
    };
    for (int trial = 0; trial < 100; ++trial) {
      Law u = gen(2), v = gen(2);
      std::vector<Elem> t{h.element(rng() % 27), h.element(rng() % 27)};
      Elem eu = evaluate(u, h, t), ev = evaluate(v, h, t);
      CHECK(evaluate(law_product({u, v}), h, t) == h.mul(eu, ev));
      CHECK(evaluate(law_inverse(u), h, t) == h.inv(eu));
      CHECK(evaluate(law_conj(u, v), h, t) == h.conj(eu, ev));
      CHECK(evaluate(law_comm(u, v), h, t) == h.comm(eu, ev));
      CHECK(evaluate(law_power(u, 3), h, t) == h.pow(eu, 3));
      CHECK(evaluate(law_power(u, 0), h, t) == h.identity());
    }
  }
}

TEST_CASE("law families") {
  CHECK(law_equal(engel_word(1), parse_law("[x,y]")));
  CHECK(print_law(engel_word(3)) == "[[[x,y],y],y]");
  CHECK(law_equal(nilpotency_word(1), law_comm(law_var(1), law_var(2))));
  CHECK(arity(nilpotency_word(3)) == 4);
  CHECK(print_law(burnside_word(6)) == "x^6");
  CHECK_THROWS_AS(engel_word(-1), Error);
  CHECK_THROWS_AS(nilpotency_word(0), Error);
  CHECK_THROWS_AS(burnside_word(0), Error);

  // every pair of a class-2 group satisfies 3-Engel
  Group h = heisenberg3();
  SatisfactionResult r = satisfies(h, engel_word(3), Exhaustive{});
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.tuples_examined == 27 * 27);
}

TEST_CASE("satisfaction strategies") {
  Group h7 = holomorph_cyclic(7);
  Law detect_law = parse_law("[[x^2,y^2]^3,y^3]");

  SECTION("the holomorph of Z/7 fails the detection law") {
    SatisfactionResult r = satisfies(h7, detect_law);
    REQUIRE(r.verdict == Verdict::Fails);
    REQUIRE(r.witness.size() >= 2);
    CHECK(evaluate(detect_law, h7, r.witness) != h7.identity());
  }
  SECTION("both coprime power subgroups satisfy it") {
    CHECK(satisfies(power_subgroup(h7, 2), detect_law).verdict ==
          Verdict::Holds);
    CHECK(satisfies(power_subgroup(h7, 3), detect_law).verdict ==
          Verdict::Holds);
  }
  SECTION("cyclic groups are abelian") {
    CHECK(satisfies(cyclic(5), parse_law("[x,y]")).verdict == Verdict::Holds);
  }
  SECTION("budget exhaustion reports Unknown, never a sample") {
    SatisfactionResult r =
        satisfies(heisenberg3(), metabelian_word(), Exhaustive{1000});
    CHECK(r.verdict == Verdict::Unknown);
    CHECK(r.tuples_examined == 0);
  }
  SECTION("Auto prefers structural and ignores the budget there") {
    SatisfactionResult r = satisfies(heisenberg3(), metabelian_word(), Auto{1000});
    CHECK(r.verdict == Verdict::Holds);
    CHECK(r.strategy == "structural");
  }
  SECTION("burnside laws") {
    SatisfactionResult holds = satisfies(symmetric_group(3), parse_law("x^6"),
                                         Structural{});
    CHECK(holds.verdict == Verdict::Holds);
    SatisfactionResult fails = satisfies(symmetric_group(3), parse_law("x^3"),
                                         Structural{});
    REQUIRE(fails.verdict == Verdict::Fails);
    // least element whose order does not divide 3 is the first transposition
    CHECK(fails.witness == std::vector<Elem>{Elem{0, 2, 1}});
  }
}

TEST_CASE("structural and exhaustive agree") {
  std::vector<Group> corpus = {cyclic(12),        symmetric_group(3),
                               symmetric_group(4), heisenberg3(),
                               dihedral(6),        dihedral(8),
                               holomorph_cyclic(7)};

  SECTION("commutativity") {
    for (const Group& g : corpus) {
      SatisfactionResult se = satisfies(g, parse_law("[x,y]"), Exhaustive{});
      SatisfactionResult ss = satisfies(g, parse_law("[x,y]"), Structural{});
      REQUIRE(se.verdict == ss.verdict);
      CHECK(se.witness == ss.witness);
    }
  }
  SECTION("metabelian law on small groups") {
    for (const Group& g : {symmetric_group(4), heisenberg3(), dihedral(6),
                           cyclic(8)}) {
      SatisfactionResult se = satisfies(g, metabelian_word(), Exhaustive{});
      SatisfactionResult ss = satisfies(g, metabelian_word(), Structural{});
      REQUIRE(se.verdict == ss.verdict);
      CHECK(se.witness == ss.witness);
    }
  }
  SECTION("class-2 law on groups of order <= 60") {
    for (const Group& g : {heisenberg3(), dihedral(4), dihedral(6),
                           symmetric_group(3), cyclic(60)}) {
      SatisfactionResult se = satisfies(g, nilpotency_word(2), Exhaustive{});
      SatisfactionResult ss = satisfies(g, nilpotency_word(2), Structural{});
      REQUIRE(se.verdict == ss.verdict);
      CHECK(se.witness == ss.witness);
    }
  }
  SECTION("Engel laws") {
    for (const Group& g : {heisenberg3(), symmetric_group(3), dihedral(8)}) {
      for (int k : {1, 2, 3}) {
        SatisfactionResult se = satisfies(g, engel_word(k), Exhaustive{});
        SatisfactionResult ss = satisfies(g, engel_word(k), Structural{});
        REQUIRE(se.verdict == ss.verdict);
        CHECK(se.witness == ss.witness);
      }
    }
  }
}

TEST_CASE("laws pass to subgroups") {
  Group h7 = holomorph_cyclic(7);
  Law detect_law = parse_law("[[x^2,y^2]^3,y^3]");
  Subgroup p2 = power_subgroup(h7, 2);
  REQUIRE(satisfies(p2, detect_law).verdict == Verdict::Holds);
  // every cyclic subgroup of the power subgroup also satisfies it
  Group p2g = p2.as_group();
  for (std::size_t i = 0; i < p2g.order(); ++i) {
    Subgroup c = closure(p2g, {p2g.element(i)});
    CHECK(satisfies(c, detect_law).verdict == Verdict::Holds);
  }
}
