#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "grouplaw/errors.hpp"
#include "grouplaw/gamma_traces.hpp"
#include "grouplaw/pipeline.hpp"
#include "grouplaw/presentation.hpp"

using namespace grouplaw;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const BundledTrace& bundled(const std::string& name) {
  for (int i = 0; i < kGammaTraceCount; ++i)
    if (name == kGammaTraces[i].name) return kGammaTraces[i];
  FAIL("no bundled trace named " + name);
  return kGammaTraces[0];
}

}  // namespace

TEST_CASE("bundled traces all replay and certify their statements") {
  auto suite = gamma_trace_suite();
  REQUIRE(suite.size() == static_cast<std::size_t>(kGammaTraceCount));
  for (const TraceResult& tr : suite) {
    INFO(tr.name << ": " << tr.note << " (step " << tr.fail_step << ")");
    CHECK(tr.valid);
    CHECK(tr.bound);
  }
}

TEST_CASE("bundled trace text matches the data files byte for byte") {
  const std::string dir = std::string(GROUPLAW_SOURCE_DIR) + "/data/traces/";
  for (int i = 0; i < kGammaTraceCount; ++i) {
    INFO(kGammaTraces[i].name);
    CHECK(slurp(dir + kGammaTraces[i].name + ".txt") == kGammaTraces[i].text);
  }
}

TEST_CASE("substitution images are pinned to the trace starts") {
  Presentation g = gamma_presentation();
  auto phi = letter_swap_substitution(g.alphabet);
  // spot-check the images themselves
  CHECK(free_word_str(phi[0], g.alphabet) == "b");
  CHECK(free_word_str(phi[4], g.alphabet) == "a^-1za");
  for (int k = 0; k < 9; ++k) {
    ParsedTrace pt = parse_trace_text(bundled("sym_r" + std::to_string(k)).text);
    CHECK(free_reduce(pt.trace.start) ==
          apply_substitution(g.relator(k), phi));
    CHECK(free_reduce(pt.trace.end).empty());
  }
}

TEST_CASE("corrupting a trace is caught at the precise step") {
  ParsedTrace pt = parse_trace_text(bundled("ab_yx").text);
  REQUIRE(pt.trace.steps.size() >= 5);
  REQUIRE(check_trace(pt.pres, pt.trace).valid);

  SECTION("wrong conjugator") {
    DerivationTrace bad = pt.trace;
    bad.steps[3].conj.push_back(1);  // extra 'a'
    CheckResult cr = check_trace(pt.pres, bad);
    CHECK_FALSE(cr.valid);
    CHECK(cr.step == 3);
  }
  SECTION("wrong position") {
    DerivationTrace bad = pt.trace;
    bad.steps[2].pos += 1;
    CheckResult cr = check_trace(pt.pres, bad);
    CHECK_FALSE(cr.valid);
    CHECK(cr.step == 2);
  }
  SECTION("position out of range") {
    DerivationTrace bad = pt.trace;
    bad.steps[0].pos = 999;
    CheckResult cr = check_trace(pt.pres, bad);
    CHECK_FALSE(cr.valid);
    CHECK(cr.step == 0);
  }
  SECTION("tampered final word") {
    DerivationTrace bad = pt.trace;
    bad.end.push_back(1);
    CheckResult cr = check_trace(pt.pres, bad);
    CHECK_FALSE(cr.valid);
    CHECK(cr.step == bad.steps.size());
  }
}

TEST_CASE("extension map images are commutators of m- or n-divisible powers") {
  SECTION("(2,3) by hand") {
    ExtensionMapReport rep = verify_extension_map(2, 3);
    CHECK(rep.valid);
    CHECK(rep.p == 2);
    CHECK(rep.q == 1);
    REQUIRE(rep.images.size() == 9);
    // the first three relators die, the rest become power commutators
    for (int i = 0; i < 3; ++i) CHECK(rep.images[i].shape == "trivial");
    CHECK(rep.images[6].relator == "[ax,by]");
    CHECK(rep.images[6].image == "a^-4b^-4a^4b^4");
    CHECK(rep.images[6].shape == "[a^4,b^4]");
    CHECK(rep.images[3].shape == "[a^3,b^3]");
    CHECK(rep.images[8].shape == "[b^4,(ab)^4]");
  }
  SECTION("m = 1 passes trivially") {
    CHECK(verify_extension_map(1, 5).valid);
  }
  SECTION("non-coprime pairs are rejected") {
    CHECK_THROWS_AS(verify_extension_map(2, 4), NotCoprimeError);
    CHECK_THROWS_AS(verify_extension_map(6, 9), NotCoprimeError);
  }
  SECTION("every coprime pair up to 12") {
    for (long long m = 2; m <= 12; ++m)
      for (long long n = m + 1; n <= 12; ++n) {
        if (std::gcd(m, n) != 1) continue;
        INFO("m=" << m << " n=" << n);
        ExtensionMapReport rep = verify_extension_map(m, n);
        CHECK(rep.valid);
        CHECK(rep.p * m - rep.q * n == 1);
      }
  }
}

TEST_CASE("six-relator list and its class-2 collapse") {
  Alphabet ab("ab");
  auto rels = six_relators(2, 3);
  REQUIRE(rels.size() == 6);
  CHECK(free_word_str(rels[0], ab) == "a^-2b^-2a^2b^2");
  CHECK(nq2_quotient_c_order(rels, ab) == 1);
  // m-family alone only kills c^{m^2}
  std::vector<FreeWord> m_family(rels.begin(), rels.begin() + 3);
  CHECK(nq2_quotient_c_order(m_family, ab) == 4);
}

TEST_CASE("full pipeline over every coprime pair") {
  for (long long m = 2; m <= 12; ++m)
    for (long long n = m + 1; n <= 12; ++n) {
      if (std::gcd(m, n) != 1) continue;
      INFO("m=" << m << " n=" << n);
      PipelineReport rep = its_abelian_pipeline(m, n);
      REQUIRE(rep.stages.size() == 3);
      for (const StageReport& s : rep.stages) {
        INFO(s.name << ": " << s.detail);
        CHECK(s.passed);
      }
      CHECK(rep.all_passed);
    }
  CHECK_THROWS_AS(its_abelian_pipeline(2, 4), NotCoprimeError);
  CHECK_THROWS_AS(its_abelian_pipeline(6, 9), NotCoprimeError);
}
