#include <random>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "grouplaw/errors.hpp"
#include "grouplaw/presentation.hpp"

using namespace grouplaw;

namespace {

Presentation one_commutator() {
  Alphabet ab("ab");
  return Presentation(ab, {parse_free_word("[a,b]", ab)});
}

FreeWord random_reduced(std::mt19937& rng, int n_letters, int len) {
  std::uniform_int_distribution<int> letter(1, n_letters);
  std::uniform_int_distribution<int> coin(0, 1);
  FreeWord w;
  for (int i = 0; i < len; ++i) w.push_back(letter(rng) * (coin(rng) ? 1 : -1));
  return free_reduce(w);
}

}  // namespace

TEST_CASE("presentation validation") {
  Alphabet ab("ab");
  CHECK_THROWS_AS(Presentation(ab, {{}}), Error);
  CHECK_THROWS_AS(Presentation(ab, {{1, -1}}), Error);
  CHECK_THROWS_AS(Presentation(ab, {{3}}), Error);
  Presentation p = one_commutator();
  CHECK(p.relators.size() == 1);
  CHECK(p.relator(0) == FreeWord{-1, -2, 1, 2});
}

TEST_CASE("nine relator presentation") {
  Presentation g = gamma_presentation();
  REQUIRE(g.relators.size() == 9);
  REQUIRE(g.alphabet.size() == 5);
  CHECK(free_word_str(g.relator(0), g.alphabet) == "a^-1x^-1ax");
  CHECK(free_word_str(g.relator(2), g.alphabet) == "b^-1a^-1z^-1abz");
  CHECK(g.relator(6) == free_comm(parse_free_word("ax", g.alphabet),
                                  parse_free_word("by", g.alphabet)));
  CHECK(g.relator(8) == free_comm(parse_free_word("by", g.alphabet),
                                  parse_free_word("abz", g.alphabet)));
  for (const FreeWord& r : g.relators) {
    CHECK(free_reduce(r) == r);
    for (int l = 0; l < g.alphabet.size(); ++l)
      CHECK(exponent_sum(r, l) == 0);  // every relator is a commutator
  }
}

TEST_CASE("certificate for a squared commutator") {
  Presentation p = one_commutator();
  FreeWord target = parse_free_word("[a^2,b]", p.alphabet);

  Certificate cert;
  cert.steps.push_back({0, 1, parse_free_word("a", p.alphabet)});
  cert.steps.push_back({0, 1, {}});
  CheckResult r = check_certificate(p, target, cert);
  CHECK(r.valid);
  CHECK(certificate_value(p, cert) == free_reduce(target));

  SECTION("wrong conjugator fails at the final comparison") {
    cert.steps[0].conj = parse_free_word("b", p.alphabet);
    CheckResult bad = check_certificate(p, target, cert);
    CHECK_FALSE(bad.valid);
    CHECK(bad.step == 2);
  }
  SECTION("relator index out of range is flagged at its step") {
    cert.steps[1].rel = 5;
    CheckResult bad = check_certificate(p, target, cert);
    CHECK_FALSE(bad.valid);
    CHECK(bad.step == 1);
  }
  SECTION("bad sign is flagged at its step") {
    cert.steps[0].sign = 2;
    CheckResult bad = check_certificate(p, target, cert);
    CHECK_FALSE(bad.valid);
    CHECK(bad.step == 0);
  }
  SECTION("dropping a step fails") {
    cert.steps.pop_back();
    CheckResult bad = check_certificate(p, target, cert);
    CHECK_FALSE(bad.valid);
    CHECK(bad.step == 1);
  }
}

TEST_CASE("certificates survive a common conjugation") {
  Presentation p = gamma_presentation();
  std::mt19937 rng(40992);

  for (int t = 0; t < 40; ++t) {
    Certificate cert;
    std::uniform_int_distribution<int> nrel(0, 8);
    std::uniform_int_distribution<int> nsteps(1, 5);
    std::uniform_int_distribution<int> coin(0, 1);
    int k = nsteps(rng);
    for (int i = 0; i < k; ++i)
      cert.steps.push_back(
          {nrel(rng), coin(rng) ? 1 : -1, random_reduced(rng, 5, 4)});
    FreeWord target = certificate_value(p, cert);
    REQUIRE(check_certificate(p, target, cert).valid);

    FreeWord u = random_reduced(rng, 5, 6);
    Certificate moved = cert;
    for (CertStep& s : moved.steps) s.conj = free_concat(s.conj, u);
    CHECK(check_certificate(p, free_conj(target, u), moved).valid);
  }
}

TEST_CASE("trace checking") {
  Presentation p = one_commutator();

  DerivationTrace tr;
  tr.start = parse_free_word("ba", p.alphabet);
  tr.steps.push_back({2, 0, 1, {}, parse_free_word("ab", p.alphabet)});
  tr.end = parse_free_word("ab", p.alphabet);
  CHECK(check_trace(p, tr).valid);

  SECTION("declared result must match") {
    tr.steps[0].declared = parse_free_word("ba", p.alphabet);
    CheckResult r = check_trace(p, tr);
    CHECK_FALSE(r.valid);
    CHECK(r.step == 0);
  }
  SECTION("position bounds") {
    tr.steps[0].pos = 3;
    CHECK(check_trace(p, tr).step == 0);
    tr.steps[0].pos = -1;
    CHECK_FALSE(check_trace(p, tr).valid);
  }
  SECTION("end mismatch is flagged past the last step") {
    tr.end = parse_free_word("ba", p.alphabet);
    CheckResult r = check_trace(p, tr);
    CHECK_FALSE(r.valid);
    CHECK(r.step == 1);
  }
  SECTION("relator range and sign") {
    tr.steps[0].rel = 1;
    CHECK(check_trace(p, tr).step == 0);
    tr.steps[0].rel = 0;
    tr.steps[0].sign = 0;
    CHECK(check_trace(p, tr).step == 0);
  }
}

TEST_CASE("random traces built move by move check out") {
  Presentation p = gamma_presentation();
  std::mt19937 rng(8253);
  std::uniform_int_distribution<int> nrel(0, 8);
  std::uniform_int_distribution<int> coin(0, 1);

  for (int t = 0; t < 60; ++t) {
    DerivationTrace tr;
    tr.start = random_reduced(rng, 5, 8);
    FreeWord cur = tr.start;
    int k = 1 + t % 6;
    for (int i = 0; i < k; ++i) {
      TraceStep s;
      s.rel = nrel(rng);
      s.sign = coin(rng) ? 1 : -1;
      s.conj = random_reduced(rng, 5, 3);
      std::uniform_int_distribution<std::size_t> at(0, cur.size());
      s.pos = static_cast<int64_t>(at(rng));
      FreeWord ins = free_conj(
          s.sign > 0 ? p.relator(s.rel) : free_inverse(p.relator(s.rel)),
          s.conj);
      FreeWord next(cur.begin(), cur.begin() + s.pos);
      next.insert(next.end(), ins.begin(), ins.end());
      next.insert(next.end(), cur.begin() + s.pos, cur.end());
      cur = free_reduce(next);
      s.declared = cur;
      tr.steps.push_back(std::move(s));
    }
    tr.end = cur;
    CHECK(check_trace(p, tr).valid);
  }
}

TEST_CASE("certificate file parsing") {
  Presentation p = one_commutator();
  std::string text =
      "# membership witness\n"
      "target: [a^2,b]\n"
      "step: rel=0 sign=+1 conj=a\n"
      "step: rel=0 sign=+1 conj=1\n";
  auto [target, cert] = parse_certificate_text(text, p.alphabet);
  CHECK(target == parse_free_word("[a^2,b]", p.alphabet));
  REQUIRE(cert.steps.size() == 2);
  CHECK(cert.steps[0].conj == FreeWord{1});
  CHECK(cert.steps[1].conj.empty());
  CHECK(check_certificate(p, target, cert).valid);

  CHECK_THROWS_AS(parse_certificate_text("step: rel=0 sign=+1 conj=1\n",
                                         p.alphabet),
                  Error);
  CHECK_THROWS_AS(parse_certificate_text("target: a\nstep: rel=0 conj=1\n",
                                         p.alphabet),
                  Error);
  CHECK_THROWS_AS(parse_certificate_text("target: a\nwhat: 1\n", p.alphabet),
                  Error);
  CHECK_THROWS_AS(parse_certificate_text("target: q\n", p.alphabet), Error);
}

TEST_CASE("presentation and trace file parsing") {
  std::string pres_text =
      "alphabet: a b\n"
      "relators:\n"
      "[a,b]\n";
  Presentation p = parse_presentation_text(pres_text);
  CHECK(p.alphabet.size() == 2);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relator(0) == FreeWord{-1, -2, 1, 2});

  std::string trace_text =
      "alphabet: a b\n"
      "relators:\n"
      "[a,b]\n"
      "\n"
      "start: ba\n"
      "step: pos=2 rel=0 sign=+1 conj=1 result=ab\n"
      "end: ab\n";
  ParsedTrace parsed = parse_trace_text(trace_text);
  CHECK(parsed.pres.relators.size() == 1);
  REQUIRE(parsed.trace.steps.size() == 1);
  CHECK(parsed.trace.steps[0].pos == 2);
  CHECK(check_trace(parsed.pres, parsed.trace).valid);

  SECTION("full nine-relator header parses back to the bundled presentation") {
    std::string text =
        "alphabet: a b x y z\n"
        "relators:\n";
    Presentation g = gamma_presentation();
    for (const FreeWord& r : g.relators)
      text += free_word_str(r, g.alphabet) + "\n";
    Presentation again = parse_presentation_text(text);
    CHECK(again.relators == g.relators);
  }

  SECTION("malformed inputs") {
    CHECK_THROWS_AS(parse_trace_text("alphabet: a b\nstart: a\nend: a\n"),
                    Error);  // missing relators section
    CHECK_THROWS_AS(parse_trace_text(pres_text + "end: a\n"), Error);
    CHECK_THROWS_AS(parse_trace_text(pres_text + "start: a\n"), Error);
    CHECK_THROWS_AS(
        parse_trace_text(pres_text +
                         "start: a\nstep: pos=0 rel=0 sign=+1 conj=1\nend: a\n"),
        Error);  // step missing result=
    CHECK_THROWS_AS(parse_presentation_text("alphabet: ab cd\nrelators:\n"),
                    UnsupportedAlphabetError);
    CHECK_THROWS_AS(parse_presentation_text(pres_text + "start: a\n"), Error);
  }
}
