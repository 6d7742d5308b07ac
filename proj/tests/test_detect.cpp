#include <catch2/catch_amalgamated.hpp>

#include "grouplaw/detect.hpp"

using namespace grouplaw;

TEST_CASE("detect reports for the two holomorph examples") {
  SECTION("hol(7) with the displayed two-variable law") {
    DetectReport r = detect_report(holomorph_cyclic(7),
                                   parse_law("[[x^2,y^2]^3,y^3]"), 2, 3);
    CHECK(r.in_m.verdict == Verdict::Holds);
    CHECK(r.in_n.verdict == Verdict::Holds);
    CHECK(r.in_g.verdict == Verdict::Fails);
    CHECK(r.order_g == 42);
    CHECK(r.warning.empty());
  }
  SECTION("hol(9) with [x^2, x^y]") {
    DetectReport r =
        detect_report(holomorph_cyclic(9), parse_law("[x^2,x^y]"), 2, 3);
    CHECK(r.in_m.verdict == Verdict::Holds);
    CHECK(r.in_n.verdict == Verdict::Holds);
    CHECK(r.in_g.verdict == Verdict::Fails);
    CHECK(r.order_g == 54);
  }
  SECTION("commutator law on a cyclic group holds everywhere") {
    DetectReport r = detect_report(cyclic(15), parse_law("[x,y]"), 2, 3);
    CHECK(r.in_m.verdict == Verdict::Holds);
    CHECK(r.in_n.verdict == Verdict::Holds);
    CHECK(r.in_g.verdict == Verdict::Holds);
    CHECK(r.order_m == 15);  // gcd(2,15) = 1, squares generate everything
    CHECK(r.order_n == 5);   // cubes land in the index-3 subgroup
  }
  SECTION("non-coprime exponents warn but still report") {
    DetectReport r = detect_report(cyclic(12), parse_law("[x,y]"), 2, 4);
    CHECK_FALSE(r.warning.empty());
    CHECK(r.in_g.verdict == Verdict::Holds);
  }
}

TEST_CASE("whole-group verdict is inherited by the power subgroups") {
  std::vector<Law> laws{parse_law("[x,y]"), metabelian_word(), engel_word(2),
                        parse_law("x^6")};
  for (const Group& g : paper_corpus()) {
    if (g.order() > 60) continue;
    for (const Law& law : laws)
      for (auto [m, n] : {std::pair<int64_t, int64_t>{2, 3}, {3, 4}, {2, 9}}) {
        DetectReport r = detect_report(g, law, m, n);
        INFO(g.descriptor() << " law " << print_law(law) << " m=" << m
                            << " n=" << n);
        if (r.in_g.verdict == Verdict::Holds) {
          CHECK(r.in_m.verdict == Verdict::Holds);
          CHECK(r.in_n.verdict == Verdict::Holds);
        }
      }
  }
}

TEST_CASE("nilpotency class is recovered from coprime power subgroups") {
  SECTION("exponent-3 Heisenberg group") {
    Group h = heisenberg3();
    CHECK(class_detectability_check(h, 2, 3));
    // the two power subgroups really are the extremes
    CHECK(power_subgroup(h, 2).order() == 27);
    CHECK(power_subgroup(h, 3).order() == 1);
  }
  SECTION("abelian groups") {
    CHECK(class_detectability_check(cyclic(8), 2, 3));
    CHECK(class_detectability_check(cyclic(8), 2, 9));
    CHECK(class_detectability_check(direct_product(cyclic(2), cyclic(4)), 3, 4));
  }
  SECTION("rejections") {
    CHECK_THROWS_AS(class_detectability_check(build_W(), 2, 3),
                    NotNilpotentError);
    CHECK_THROWS_AS(class_detectability_check(cyclic(6), 2, 4),
                    NotCoprimeError);
  }
}

TEST_CASE("Fitting bound checker") {
  Group h = heisenberg3();
  Subgroup m_sub = closure(h, {Elem{1, 0, 0}, Elem{0, 0, 1}});
  Subgroup n_sub = closure(h, {Elem{0, 1, 0}, Elem{0, 0, 1}});

  SECTION("the two abelian wings of the Heisenberg group") {
    REQUIRE(is_normal(h, m_sub));
    REQUIRE(is_normal(h, n_sub));
    CHECK(nilpotency_class(m_sub.as_group()) == 1);
    CHECK(fitting_check(h, m_sub, n_sub));
    // their join is the whole class-2 group, so the bound 1+1 is tight
    CHECK(nilpotency_class(h) == 2);
  }
  SECTION("degenerate inputs") {
    Group a = cyclic(12);
    CHECK(fitting_check(a, whole_subgroup(a), whole_subgroup(a)));
    CHECK(fitting_check(h, trivial_subgroup(h), n_sub));
  }
  SECTION("precondition violations throw") {
    Group s3 = symmetric_group(3);
    Elem swap01{1, 0, 2};
    Subgroup tiny = closure(s3, {swap01});
    CHECK_FALSE(is_normal(s3, tiny));
    CHECK_THROWS_AS(fitting_check(s3, tiny, trivial_subgroup(s3)),
                    PreconditionViolatedError);
    CHECK_THROWS_AS(fitting_check(s3, whole_subgroup(s3), trivial_subgroup(s3)),
                    PreconditionViolatedError);  // S3 is not nilpotent
  }
}

TEST_CASE("truncation witness search") {
  SECTION("the (2,3) witness appears by degree 5") {
    TruncationWitness w = truncation_witness(2, 3, 5);
    CHECK(w.group.order() == 6);
    CHECK(order_of(w.group, w.a) == 3);
    CHECK(order_of(w.group, w.b) == 2);
    CHECK(order_of(w.group, w.group.mul(w.a, w.b)) == 2);
    CHECK(satisfies(w.group, parse_law("[x,y]")).verdict == Verdict::Fails);
  }
  SECTION("degree 1 has no witness") {
    CHECK_THROWS_AS(truncation_witness(2, 3, 1), SearchExhaustedError);
  }
  SECTION("bad exponents") {
    CHECK_THROWS_AS(truncation_witness(1, 3, 5), Error);
  }
}

TEST_CASE("verify_paper runs exactly the selection") {
  SECTION("empty selection gives an empty report") {
    CHECK(verify_paper({}).rows.empty());
  }
  SECTION("single named check") {
    ReportTable t = verify_paper({"W-derived-length"});
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].name == "W-derived-length");
    CHECK(t.rows[0].expected == "3");
    CHECK(t.rows[0].passed);
  }
  SECTION("cheap checks pass and keep canonical order") {
    ReportTable t =
        verify_paper({"truncation-witness", "heisenberg-two-subgroups"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].name == "heisenberg-two-subgroups");  // canonical order
    CHECK(t.rows[1].name == "truncation-witness");
    CHECK(t.all_passed());
  }
  SECTION("unknown names are rejected") {
    CHECK_THROWS_AS(verify_paper({"no-such-check"}), Error);
  }
}

TEST_CASE("fixed corpus composition") {
  const auto& corpus = paper_corpus();
  // 24 cyclic + 12 dihedral + heis3 + two holomorphs + W + two W quotients
  CHECK(corpus.size() == 42);
  std::size_t w_count = 0, quot_count = 0;
  for (const Group& g : corpus) {
    if (g.descriptor() == "W4374") {
      ++w_count;
      CHECK(g.order() == 4374);
    }
    if (g.descriptor().rfind("W4374/", 0) == 0) ++quot_count;
  }
  CHECK(w_count == 1);
  CHECK(quot_count == 2);
}
