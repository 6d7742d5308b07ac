// Acceptance gate: one criterion per published guarantee, one PASS/FAIL line
// each, nonzero exit if anything fails.  Run with no arguments for the fast
// set, --slow for the exhaustive search criterion, --all for both.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "grouplaw/constructions.hpp"
#include "grouplaw/detect.hpp"
#include "grouplaw/gamma_traces.hpp"
#include "grouplaw/mat2.hpp"
#include "grouplaw/nq2.hpp"
#include "grouplaw/pipeline.hpp"
#include "grouplaw/series.hpp"

using namespace grouplaw;

namespace {

struct Checker {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Criterion {
  int number;
  std::string name;
  double budget_ms;
  bool slow;
  std::function<void(Checker&)> body;
};

// 1. The order-4374 counterexample and its coprime power subgroups.
void crit_counterexample_structure(Checker& c) {
  Group w = build_W();
  c.require(w.order() == 4374, "|W| != 4374");
  std::vector<Subgroup> ds = derived_series(w);
  std::vector<std::size_t> orders;
  for (const Subgroup& s : ds) orders.push_back(s.order());
  c.require(orders == std::vector<std::size_t>{4374, 243, 3, 1},
            "derived series orders wrong");
  c.require(ds.size() == 4, "derived length != 3");

  Group p2 = power_subgroup(w, 2).as_group();
  Group p3 = power_subgroup(w, 3).as_group();
  c.require(p2.order() == 2187, "|W^*2| != 2187");
  c.require(p3.order() == 162, "|W^*3| != 162");
  c.require(derived_length(p2) == 2, "dl(W^*2) != 2");
  c.require(derived_length(p3) == 2, "dl(W^*3) != 2");
  c.note("orders 4374/2187/162, derived lengths 3/2/2");
}

// 2. Matrix identities behind the construction, all mod 9.
void crit_matrix_goldens(Checker& c) {
  Mat2 x(9, {1, -1, 3, -2});
  Mat2 y(9, {-2, 0, 0, 4});
  c.require(x * x == Mat2(9, {-2, 1, -3, 1}), "X^2 wrong");
  c.require(y * y == Mat2(9, {4, 0, 0, -2}), "Y^2 wrong");
  c.require(x * y == Mat2(9, {-2, -4, 3, 1}), "XY wrong");
  Mat2 z = x.inverse() * y.inverse() * x * y;
  c.require(z == Mat2(9, {1, 3, 0, 1}), "[X,Y] wrong");
  c.require(!(z == Mat2::identity(9)) && z.pow(3) == Mat2::identity(9),
            "order(Z) != 3");

  // a matrix commutes with Z exactly when 3 | a-d and 3 | c
  auto divides = [](const Mat2& m) {
    return (m.a[0] - m.a[3]) % 3 == 0 && m.a[2] % 3 == 0;
  };
  c.require(divides(x) && divides(y), "X or Y fails the divisibility test");
  int checked = 0;
  bool iff_holds = true;
  for (int64_t a = 0; a < 9; ++a)
    for (int64_t b = 0; b < 9; ++b)
      for (int64_t d = 0; d < 9; ++d)
        for (int64_t e = 0; e < 9; ++e) {
          Mat2 m(9, {a, b, d, e});
          if ((m * z == z * m) != divides(m)) iff_holds = false;
          ++checked;
        }
  c.require(iff_holds, "centralizer criterion is not an iff");
  c.note("goldens exact, criterion verified on " + std::to_string(checked) +
         " matrices");
}

// 3. The two holomorph detection examples.
void crit_holomorph_detect(Checker& c) {
  using clock = std::chrono::steady_clock;
  auto run = [&](int n, const std::string& law_text) {
    auto t0 = clock::now();
    DetectReport r = detect_report(holomorph_cyclic(n), parse_law(law_text),
                                   2, 3);
    double ms = std::chrono::duration<double, std::milli>(clock::now() - t0)
                    .count();
    c.require(r.in_m.verdict == Verdict::Holds,
              "hol(" + std::to_string(n) + ") squares verdict");
    c.require(r.in_n.verdict == Verdict::Holds,
              "hol(" + std::to_string(n) + ") cubes verdict");
    c.require(r.in_g.verdict == Verdict::Fails,
              "hol(" + std::to_string(n) + ") whole-group verdict");
    c.require(ms < 5000.0, "hol(" + std::to_string(n) + ") over 5 s");
    return ms;
  };
  double m7 = run(7, "[[x^2,y^2]^3,y^3]");
  double m9 = run(9, "[x^2,x^y]");
  std::ostringstream os;
  os.precision(1);
  os << std::fixed << "holds/holds/fails twice, " << m7 << " ms and " << m9
     << " ms";
  c.note(os.str());
}

// 4. The abelianization pipeline over every coprime pair, plus rejections.
void crit_pipeline(Checker& c) {
  int pairs = 0;
  for (int64_t m = 2; m <= 12; ++m)
    for (int64_t n = m + 1; n <= 12; ++n) {
      if (std::gcd(m, n) != 1) continue;
      PipelineReport rep = its_abelian_pipeline(m, n);
      c.require(rep.all_passed,
                "pipeline failed at (" + std::to_string(m) + "," +
                    std::to_string(n) + ")");
      ++pairs;
    }
  c.require(pairs == 34, "expected 34 coprime pairs");
  for (auto [m, n] : {std::pair<int64_t, int64_t>{2, 4}, {6, 9}}) {
    bool threw = false;
    try {
      its_abelian_pipeline(m, n);
    } catch (const NotCoprimeError&) {
      threw = true;
    }
    c.require(threw, "no NotCoprime for (" + std::to_string(m) + "," +
                         std::to_string(n) + ")");
  }
  c.note("34 pairs pass, both non-coprime pairs rejected");
}

// 5. Class-2 collection goldens.
void crit_class2_goldens(Checker& c) {
  Alphabet ab("ab");
  for (int64_t m = 1; m <= 10; ++m) {
    std::string text =
        "[a^" + std::to_string(m) + ",b^" + std::to_string(m) + "]";
    MalcevTriple t = nq2_eval(parse_free_word(text, ab), ab);
    c.require(t == MalcevTriple{0, 0, m * m},
              text + " != c^" + std::to_string(m * m));
  }

  // every word of length <= 4 over {a,b}
  std::vector<FreeWord> words{{}};
  std::size_t layer_start = 0;
  for (int len = 1; len <= 4; ++len) {
    std::size_t layer_end = words.size();
    for (std::size_t i = layer_start; i < layer_end; ++i)
      for (int letter : {1, -1, 2, -2}) {
        FreeWord w = words[i];
        w.push_back(letter);
        words.push_back(std::move(w));
      }
    layer_start = layer_end;
  }
  c.require(words.size() == 341, "word enumeration size");

  // weight-2 commutators are central, which forces every weight-3
  // commutator over these words to collapse
  bool central = true;
  for (const FreeWord& u : words)
    for (const FreeWord& v : words) {
      MalcevTriple t = nq2_eval(free_comm(u, v), ab);
      if (t.alpha != 0 || t.beta != 0) central = false;
    }
  c.require(central, "a weight-2 commutator is not central");

  // and directly, in both bracketing orders, on the shorter words
  std::vector<FreeWord> shorts(words.begin(), words.begin() + 21);
  bool direct = true;
  for (const FreeWord& u : shorts)
    for (const FreeWord& v : shorts)
      for (const FreeWord& w : shorts) {
        if (nq2_eval(free_comm(free_comm(u, v), w), ab) != MalcevTriple{})
          direct = false;
        if (nq2_eval(free_comm(w, free_comm(u, v)), ab) != MalcevTriple{})
          direct = false;
      }
  c.require(direct, "a weight-3 commutator is nonzero");

  c.require(nq2_quotient_c_order(six_relators(2, 3), ab) == 1,
            "(2,3) relators: c-order != 1");
  c.require(nq2_quotient_c_order(six_relators(3, 4), ab) == 1,
            "(3,4) relators: c-order != 1");
  std::vector<FreeWord> six = six_relators(2, 3);
  std::vector<FreeWord> m_only(six.begin(), six.begin() + 3);
  c.require(nq2_quotient_c_order(m_only, ab) == 4,
            "m=2 triple: c-order != 4");
  c.note("m^2 golden for m <= 10, 341^2 pairs central, 2*21^3 direct triples");
}

// 6. Property suites over the fixed corpus.
void crit_property_suites(Checker& c) {
  auto run = [&](const std::string& label, SuiteOutcome outcome) {
    c.require(outcome.violations == 0, label + ": " + outcome.str());
    return outcome.checked;
  };
  std::size_t n = 0;
  n += run("basic-quotient", basic_quotient_suite(12));
  n += run("super-basic", super_basic_suite(12));
  n += run("fitting", fitting_suite(200));
  n += run("lagrange", lagrange_suite());
  n += run("law-monotonicity", law_monotonicity_suite(200));
  c.note(std::to_string(n) + " checks, zero violations");
}

// 7. Detectability of nilpotency class and of the Engel laws.
void crit_detectability_suites(Checker& c) {
  SuiteOutcome cls = class_detectability_suite();
  c.require(cls.violations == 0, "class: " + cls.str());
  SuiteOutcome engel = engel_detectability_suite(200);
  c.require(engel.violations == 0, "engel: " + engel.str());
  c.note(std::to_string(cls.checked) + " class checks and " +
         std::to_string(engel.checked) + " engel checks, zero violations");
}

// 8. The order-1458 search (slow tag; the full enumeration must succeed).
void crit_search_1458(Checker& c) {
  std::optional<Group> g = search_counterexample_1458(SearchMode::Full);
  c.require(g.has_value(), "search found nothing");
  if (!g) return;
  c.require(g->order() == 1458, "order != 1458");
  c.require(derived_length(*g) == 3, "derived length != 3");
  Group p2 = power_subgroup(*g, 2).as_group();
  Group p3 = power_subgroup(*g, 3).as_group();
  c.require(derived_length(p2) <= 2, "squares subgroup not metabelian");
  c.require(derived_length(p3) <= 2, "cubes subgroup not metabelian");
  c.note("order 1458, derived lengths 3/" + std::to_string(derived_length(p2)) +
         "/" + std::to_string(derived_length(p3)));
}

// 9. Derivation traces and the normal-closure certificate checker.
void crit_traces_and_certificates(Checker& c) {
  std::vector<TraceResult> suite = gamma_trace_suite();
  c.require(suite.size() == kGammaTraceCount, "trace count");
  for (const TraceResult& t : suite)
    c.require(t.valid && t.bound, "trace " + t.name + ": " + t.note);

  const char* ab_yx_text = nullptr;
  for (std::size_t i = 0; i < kGammaTraceCount; ++i)
    if (std::string(kGammaTraces[i].name) == "ab_yx")
      ab_yx_text = kGammaTraces[i].text;
  c.require(ab_yx_text != nullptr, "bundled ab_yx trace missing");
  if (!ab_yx_text) return;
  ParsedTrace pt = parse_trace_text(ab_yx_text);
  {
    DerivationTrace bad = pt.trace;
    bad.steps[3].conj.push_back(1);  // wrong conjugator
    CheckResult r = check_trace(pt.pres, bad);
    c.require(!r.valid && r.step == 3, "wrong conjugator not caught at 3");
  }
  {
    DerivationTrace bad = pt.trace;
    bad.steps[2].pos += 1;  // wrong position
    CheckResult r = check_trace(pt.pres, bad);
    c.require(!r.valid && r.step == 2, "wrong position not caught at 2");
  }

  Presentation pres(Alphabet("ab"), {parse_free_word("[a,b]", Alphabet("ab"))});
  FreeWord target = parse_free_word("[a^2,b]", pres.alphabet);
  Certificate cert;
  cert.steps.push_back({0, 1, parse_free_word("a", pres.alphabet)});
  cert.steps.push_back({0, 1, {}});
  CheckResult good = check_certificate(pres, target, cert);
  c.require(good.valid, "[a^2,b] certificate rejected");

  Certificate bad = cert;
  bad.steps[0].conj = parse_free_word("b", pres.alphabet);
  CheckResult r = check_certificate(pres, target, bad);
  c.require(!r.valid && r.step == bad.steps.size(),
            "corrupted certificate not caught at the final comparison");
  c.note(std::to_string(suite.size()) +
         " traces valid, certificate valid, corruptions localized");
}

// 10. The symmetric-group witness for the order truncation.
void crit_truncation_witness(Checker& c) {
  TruncationWitness w = truncation_witness(2, 3, 5);
  c.require(w.group.order() == 6, "witness order != 6");
  std::vector<Subgroup> ds = derived_series(w.group);
  c.require(ds.size() > 1 && ds[1].order() > 1, "witness is abelian");
  c.note("nonabelian witness of order 6");
}

}  // namespace

int main(int argc, char** argv) {
  bool want_fast = true, want_slow = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--slow") {
      want_fast = false;
      want_slow = true;
    } else if (a == "--all") {
      want_fast = true;
      want_slow = true;
    } else {
      std::cerr << "usage: " << argv[0] << " [--slow | --all]\n";
      return 2;
    }
  }

  std::vector<Criterion> criteria = {
      {1, "counterexample-structure", 60000, false, crit_counterexample_structure},
      {2, "matrix-goldens", 60000, false, crit_matrix_goldens},
      {3, "holomorph-detect", 10000, false, crit_holomorph_detect},
      {4, "abelianization-pipeline", 10000, false, crit_pipeline},
      {5, "class2-collection-goldens", 60000, false, crit_class2_goldens},
      {6, "property-suites", 120000, false, crit_property_suites},
      {7, "detectability-suites", 120000, false, crit_detectability_suites},
      {8, "search-1458", 1800000, true, crit_search_1458},
      {9, "traces-and-certificates", 60000, false, crit_traces_and_certificates},
      {10, "truncation-witness", 60000, false, crit_truncation_witness},
  };

  int failures = 0;
  for (const Criterion& crit : criteria) {
    if (crit.slow ? !want_slow : !want_fast) continue;
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      crit.body(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("threw: ") + e.what());
    }
    double ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();
    if (ms > crit.budget_ms) c.require(false, "over time budget");
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << crit.number << " "
              << crit.name << " (" << static_cast<int64_t>(ms) << " ms)";
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
    if (!c.ok) ++failures;
  }
  if (failures) {
    std::cout << failures << " criterion(s) FAILED\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
