#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grouplaw/constructions.hpp"
#include "grouplaw/errors.hpp"
#include "grouplaw/group.hpp"
#include "grouplaw/law.hpp"
#include "grouplaw/pipeline.hpp"
#include "grouplaw/series.hpp"
#include "grouplaw/subgroups.hpp"

namespace grouplaw {

inline std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    default: return "unknown";
  }
}

// ------------------------------------------------------------------ reports

// Verdicts for one law on a group and its two power subgroups.  The law is
// detectable on this instance when in_G agrees with (in_m and in_n).
struct DetectReport {
  std::string group;
  std::string law;
  int64_t m = 0, n = 0;
  SatisfactionResult in_m, in_n, in_g;
  uint64_t order_g = 0, order_m = 0, order_n = 0;
  std::string warning;  // set when gcd(m,n) != 1; verdicts still computed
};

inline DetectReport detect_report(const Group& g, const Law& law, int64_t m,
                                  int64_t n) {
  DetectReport rep;
  rep.group = g.descriptor();
  rep.law = print_law(law);
  rep.m = m;
  rep.n = n;
  if (std::gcd(m, n) != 1)
    rep.warning = "gcd(" + std::to_string(m) + "," + std::to_string(n) +
                  ") != 1: detectability is only asserted for coprime exponents";
  Subgroup pm = power_subgroup(g, m);
  Subgroup pn = power_subgroup(g, n);
  rep.order_g = g.order();
  rep.order_m = pm.order();
  rep.order_n = pn.order();
  rep.in_m = satisfies(pm, law);
  rep.in_n = satisfies(pn, law);
  rep.in_g = satisfies(g, law);
  return rep;
}

// --------------------------------------------------- nilpotency class check

// class(G) = max(class(G^{*m}), class(G^{*n})) for coprime m, n.
inline bool class_detectability_check(const Group& g, int64_t m, int64_t n) {
  if (!is_nilpotent(g))
    throw NotNilpotentError(g.descriptor() + " is not nilpotent");
  if (std::gcd(m, n) != 1)
    throw NotCoprimeError("gcd(" + std::to_string(m) + ", " +
                          std::to_string(n) + ") != 1");
  int cm = nilpotency_class(power_subgroup(g, m).as_group());
  int cn = nilpotency_class(power_subgroup(g, n).as_group());
  return nilpotency_class(g) == std::max(cm, cn);
}

// -------------------------------------------------------------- Fitting

// class(MN) <= class(M) + class(N) for normal nilpotent M, N.
inline bool fitting_check(const Group& g, const Subgroup& m_sub,
                          const Subgroup& n_sub) {
  if (!is_normal(g, m_sub) || !is_normal(g, n_sub))
    throw PreconditionViolatedError("both subgroups must be normal in " +
                                    g.descriptor());
  Group mg = m_sub.as_group();
  Group ng = n_sub.as_group();
  if (!is_nilpotent(mg) || !is_nilpotent(ng))
    throw PreconditionViolatedError("both subgroups must be nilpotent");
  std::vector<Elem> seed = m_sub.gens;
  seed.insert(seed.end(), n_sub.gens.begin(), n_sub.gens.end());
  Subgroup join = closure(g, std::move(seed));
  return nilpotency_class(join.as_group()) <=
         nilpotency_class(mg) + nilpotency_class(ng);
}

// ------------------------------------------------------ truncation witness

// a, b in a symmetric group with order(a) = n, order(b) = m, order(ab) = m;
// the group they generate can then not be abelian (an abelian one would give
// ab order mn), so the five-relator truncation has a nonabelian quotient.
struct TruncationWitness {
  Group group;  // <a, b>
  Elem a, b;
};

inline TruncationWitness truncation_witness(int64_t m, int64_t n,
                                            int degree_bound) {
  if (m < 2 || n < 2) throw Error("witness exponents must be >= 2");
  // full carriers are materialized, so the degree is capped where the
  // factorial is still harmless
  if (degree_bound > 8)
    throw Error("degree bound above 8 is not supported (factorial carrier)");
  for (int d = 1; d <= degree_bound; ++d) {
    Group s = symmetric_group(d);
    std::vector<Elem> of_m, of_n;
    for (std::size_t id = 0; id < s.order(); ++id) {
      const Elem& e = s.element(id);
      int64_t o = order_of(s, e);
      if (o == m) of_m.push_back(e);
      if (o == n) of_n.push_back(e);
    }
    for (const Elem& a : of_n)
      for (const Elem& b : of_m) {
        if (order_of(s, s.mul(a, b)) != m) continue;
        if (s.mul(a, b) == s.mul(b, a)) continue;  // want a nonabelian witness
        Subgroup h = closure(s, {a, b});
        return TruncationWitness{h.as_group(), a, b};
      }
  }
  throw SearchExhaustedError("no witness in symmetric groups of degree <= " +
                             std::to_string(degree_bound));
}

// ------------------------------------------------------------------ corpus

// The fixed bench of groups every property suite quantifies over: cyclic
// groups to order 24, dihedral groups to order 24, the exponent-3 Heisenberg
// group, two holomorphs, W, and W's quotients by its derived-series terms.
inline const std::vector<Group>& paper_corpus() {
  static const std::vector<Group> corpus = [] {
    std::vector<Group> out;
    for (int64_t k = 1; k <= 24; ++k) out.push_back(cyclic(k));
    for (int64_t k = 1; k <= 12; ++k) out.push_back(dihedral(k));
    out.push_back(heisenberg3());
    out.push_back(holomorph_cyclic(7));
    out.push_back(holomorph_cyclic(9));
    Group w = build_W();
    out.push_back(w);
    std::vector<Subgroup> ds = derived_series(w);
    for (std::size_t i = 1; i < ds.size(); ++i) {
      if (ds[i].order() == 1 || ds[i].order() == w.order()) continue;
      out.push_back(quotient(w, ds[i]).quot);
    }
    return out;
  }();
  return corpus;
}

// ----------------------------------------------------------- suite driver

struct SuiteOutcome {
  int64_t checked = 0;
  int64_t violations = 0;
  std::string first_violation;

  void count(bool ok, const std::string& label) {
    ++checked;
    if (!ok) {
      ++violations;
      if (first_violation.empty()) first_violation = label;
    }
  }
  std::string str() const {
    std::string s = std::to_string(violations) + " violations in " +
                    std::to_string(checked) + " checks";
    if (violations > 0) s += " (first: " + first_violation + ")";
    return s;
  }
};

namespace detail {

inline const std::vector<std::pair<int64_t, int64_t>>& coprime_pairs_12() {
  static const std::vector<std::pair<int64_t, int64_t>> pairs = [] {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (int64_t m = 2; m <= 12; ++m)
      for (int64_t n = m + 1; n <= 12; ++n)
        if (std::gcd(m, n) == 1) out.emplace_back(m, n);
    return out;
  }();
  return pairs;
}

// Distinct power subgroups G^{*m}, m = 1..12, keyed by member set; the
// returned map sends each m to an index into the subgroup list.
struct PowerFamily {
  std::vector<Subgroup> distinct;
  std::array<int, 13> index_of_m{};  // [1..12]
};

inline PowerFamily power_family(const Group& g) {
  PowerFamily fam;
  std::map<std::vector<int>, int> seen;
  for (int64_t m = 1; m <= 12; ++m) {
    Subgroup p = power_subgroup(g, m);
    auto [it, fresh] = seen.emplace(p.members, static_cast<int>(fam.distinct.size()));
    if (fresh) fam.distinct.push_back(std::move(p));
    fam.index_of_m[static_cast<std::size_t>(m)] = it->second;
  }
  return fam;
}

}  // namespace detail

// class(G) recovered from any coprime pair of power subgroups, over the
// nilpotent part of the corpus.
inline SuiteOutcome class_detectability_suite() {
  SuiteOutcome out;
  for (const Group& g : paper_corpus()) {
    if (!is_nilpotent(g)) continue;
    for (auto [m, n] : detail::coprime_pairs_12())
      out.count(class_detectability_check(g, m, n),
                g.descriptor() + " m=" + std::to_string(m) +
                    " n=" + std::to_string(n));
  }
  return out;
}

// G is k-Engel iff both coprime power subgroups are, k <= 4; small corpus
// members only (exhaustive scans are quadratic in the order).
inline SuiteOutcome engel_detectability_suite(std::size_t max_order = 200) {
  SuiteOutcome out;
  for (const Group& g : paper_corpus()) {
    if (g.order() > max_order) continue;
    detail::PowerFamily fam = detail::power_family(g);
    for (int k = 1; k <= 4; ++k) {
      Law law = engel_word(k);
      bool in_g = satisfies(g, law).verdict == Verdict::Holds;
      std::vector<bool> in_sub;
      for (const Subgroup& p : fam.distinct)
        in_sub.push_back(satisfies(p, law).verdict == Verdict::Holds);
      for (auto [m, n] : detail::coprime_pairs_12()) {
        bool both = in_sub[fam.index_of_m[static_cast<std::size_t>(m)]] &&
                    in_sub[fam.index_of_m[static_cast<std::size_t>(n)]];
        out.count(in_g == both, g.descriptor() + " k=" + std::to_string(k) +
                                    " m=" + std::to_string(m) +
                                    " n=" + std::to_string(n));
      }
    }
  }
  return out;
}

// exponent(G) | r iff both power-subgroup exponents divide r.
inline SuiteOutcome burnside_detectability_suite(std::size_t max_order = 200) {
  SuiteOutcome out;
  for (const Group& g : paper_corpus()) {
    if (g.order() > max_order) continue;
    detail::PowerFamily fam = detail::power_family(g);
    int64_t eg = exponent(g);
    std::vector<int64_t> esub;
    for (const Subgroup& p : fam.distinct) esub.push_back(exponent(p.as_group()));
    for (auto [m, n] : detail::coprime_pairs_12()) {
      int64_t em = esub[fam.index_of_m[static_cast<std::size_t>(m)]];
      int64_t en = esub[fam.index_of_m[static_cast<std::size_t>(n)]];
      bool ok = true;
      for (int64_t r = 1; r <= 2 * eg && ok; ++r)
        ok = (r % eg == 0) == (r % em == 0 && r % en == 0);
      out.count(ok, g.descriptor() + " m=" + std::to_string(m) +
                        " n=" + std::to_string(n));
    }
  }
  return out;
}

// Fitting bound over naturally arising normal nilpotent subgroup pairs.
inline SuiteOutcome fitting_suite(std::size_t max_order = 200) {
  SuiteOutcome out;
  for (const Group& g : paper_corpus()) {
    if (g.order() > max_order) continue;
    std::vector<Subgroup> cands{trivial_subgroup(g), center(g),
                                derived_subgroup(g), power_subgroup(g, 2),
                                power_subgroup(g, 3)};
    std::vector<Subgroup> normals;
    for (Subgroup& s : cands) {
      if (!is_nilpotent(s.as_group())) continue;
      bool dup = false;
      for (const Subgroup& t : normals) dup = dup || t.same_as(s);
      if (!dup) normals.push_back(std::move(s));
    }
    for (std::size_t i = 0; i < normals.size(); ++i)
      for (std::size_t j = i; j < normals.size(); ++j)
        out.count(fitting_check(g, normals[i], normals[j]),
                  g.descriptor() + " pair " + std::to_string(i) + "," +
                      std::to_string(j));
  }
  return out;
}

// Projection of the power subgroup equals the power subgroup of the
// quotient, for quotients by derived subgroup and center.
inline SuiteOutcome basic_quotient_suite(int64_t max_m = 12) {
  SuiteOutcome out;
  for (const Group& g : paper_corpus()) {
    std::vector<Subgroup> normals{derived_subgroup(g), center(g)};
    for (const Subgroup& n : normals) {
      QuotientMap pi = quotient(g, n);
      for (int64_t m = 1; m <= max_m; ++m) {
        Subgroup pg = power_subgroup(g, m);
        Subgroup pq = power_subgroup(pi.quot, m);
        std::vector<int> projected;
        for (int id : pg.members)
          projected.push_back(
              pi.quot.index_of(pi(g.element(static_cast<std::size_t>(id)))));
        std::sort(projected.begin(), projected.end());
        projected.erase(std::unique(projected.begin(), projected.end()),
                        projected.end());
        out.count(projected == pq.members,
                  g.descriptor() + " mod(order " + std::to_string(n.order()) +
                      ") m=" + std::to_string(m));
      }
    }
  }
  return out;
}

// g lies in <g^m> whenever gcd(order(g), m) = 1.
inline SuiteOutcome super_basic_suite(int64_t max_m = 12) {
  SuiteOutcome out;
  for (const Group& g : paper_corpus()) {
    for (std::size_t id = 0; id < g.order(); ++id) {
      const Elem& e = g.element(id);
      int64_t o = order_of(g, e);
      for (int64_t m = 1; m <= max_m; ++m) {
        if (std::gcd(o, m) != 1) continue;
        // walk the cyclic subgroup <e^m> looking for e itself
        Elem step = g.pow(e, m);
        Elem cur = step;
        bool found = false;
        for (int64_t i = 0; i < o && !found; ++i) {
          found = cur == e;
          cur = g.mul(cur, step);
        }
        out.count(found, g.descriptor() + " element " + elem_str(e) +
                             " m=" + std::to_string(m));
      }
    }
  }
  return out;
}

// |H| divides |G| for every subgroup the library produces.
inline SuiteOutcome lagrange_suite() {
  SuiteOutcome out;
  for (const Group& g : paper_corpus()) {
    std::vector<Subgroup> subs{center(g), derived_subgroup(g)};
    for (int64_t m = 2; m <= 12; ++m) subs.push_back(power_subgroup(g, m));
    for (const Subgroup& s : derived_series(g)) subs.push_back(s);
    for (const Subgroup& s : subs)
      out.count(g.order() % s.order() == 0,
                g.descriptor() + " subgroup order " + std::to_string(s.order()));
  }
  return out;
}

// A law holding in G holds in every computed subgroup of G.
inline SuiteOutcome law_monotonicity_suite(std::size_t max_order = 200) {
  SuiteOutcome out;
  for (const Group& g : paper_corpus()) {
    if (g.order() > max_order) continue;
    std::vector<Law> laws{parse_law("[x,y]"), metabelian_word(), engel_word(2),
                          burnside_word(exponent(g))};
    std::vector<Subgroup> subs{power_subgroup(g, 2), power_subgroup(g, 3),
                               derived_subgroup(g), center(g)};
    for (const Law& law : laws) {
      if (satisfies(g, law).verdict != Verdict::Holds) continue;
      for (const Subgroup& s : subs)
        out.count(satisfies(s, law).verdict == Verdict::Holds,
                  g.descriptor() + " law " + print_law(law) + " subgroup order " +
                      std::to_string(s.order()));
    }
  }
  return out;
}

// ------------------------------------------------------------ verify_paper

struct ReportRow {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
  int64_t millis = 0;
};

struct ReportTable {
  std::vector<ReportRow> rows;
  bool all_passed() const {
    for (const ReportRow& r : rows)
      if (!r.passed) return false;
    return true;
  }
};

inline const std::vector<std::string>& paper_check_names() {
  static const std::vector<std::string> names = {
      "W-order",
      "W-derived-length",
      "W-power-subgroups",
      "hol7-detect",
      "hol9-detect",
      "its-abelian",
      "class-detectability",
      "fitting",
      "basic-quotient",
      "super-basic",
      "heisenberg-two-subgroups",
      "truncation-witness",
  };
  return names;
}

namespace detail {

struct CheckBody {
  std::string expected;
  std::string actual;
  bool passed = false;
};

inline std::string detect_triple(const DetectReport& r) {
  return "(" + verdict_str(r.in_m.verdict) + ", " + verdict_str(r.in_n.verdict) +
         ", " + verdict_str(r.in_g.verdict) + ")";
}

inline CheckBody run_paper_check(const std::string& name) {
  CheckBody body;
  if (name == "W-order") {
    body.expected = "4374";
    body.actual = std::to_string(build_W().order());
  } else if (name == "W-derived-length") {
    body.expected = "3";
    body.actual = std::to_string(derived_length(build_W()));
  } else if (name == "W-power-subgroups") {
    Group w = build_W();
    Group p2 = power_subgroup(w, 2).as_group();
    Group p3 = power_subgroup(w, 3).as_group();
    body.expected = "|W^*2|=2187 dl=2, |W^*3|=162 dl=2";
    body.actual = "|W^*2|=" + std::to_string(p2.order()) +
                  " dl=" + std::to_string(derived_length(p2)) +
                  ", |W^*3|=" + std::to_string(p3.order()) +
                  " dl=" + std::to_string(derived_length(p3));
  } else if (name == "hol7-detect") {
    DetectReport r = detect_report(holomorph_cyclic(7),
                                   parse_law("[[x^2,y^2]^3,y^3]"), 2, 3);
    body.expected = "(holds, holds, fails)";
    body.actual = detect_triple(r);
  } else if (name == "hol9-detect") {
    DetectReport r =
        detect_report(holomorph_cyclic(9), parse_law("[x^2,x^y]"), 2, 3);
    body.expected = "(holds, holds, fails)";
    body.actual = detect_triple(r);
  } else if (name == "its-abelian") {
    const auto& pairs = coprime_pairs_12();
    int64_t passed = 0;
    for (auto [m, n] : pairs)
      if (its_abelian_pipeline(m, n).all_passed) ++passed;
    body.expected = std::to_string(pairs.size()) + "/" +
                    std::to_string(pairs.size()) + " coprime pairs pass";
    body.actual = std::to_string(passed) + "/" + std::to_string(pairs.size()) +
                  " coprime pairs pass";
  } else if (name == "class-detectability") {
    body.expected = "0 violations";
    SuiteOutcome s = class_detectability_suite();
    body.actual = s.str();
    body.passed = s.violations == 0;
    return body;
  } else if (name == "fitting") {
    body.expected = "0 violations";
    SuiteOutcome s = fitting_suite();
    body.actual = s.str();
    body.passed = s.violations == 0;
    return body;
  } else if (name == "basic-quotient") {
    body.expected = "0 violations";
    SuiteOutcome s = basic_quotient_suite();
    body.actual = s.str();
    body.passed = s.violations == 0;
    return body;
  } else if (name == "super-basic") {
    body.expected = "0 violations";
    SuiteOutcome s = super_basic_suite();
    body.actual = s.str();
    body.passed = s.violations == 0;
    return body;
  } else if (name == "heisenberg-two-subgroups") {
    Group h = heisenberg3();
    Subgroup m_sub = closure(h, {Elem{1, 0, 0}, Elem{0, 0, 1}});
    Subgroup n_sub = closure(h, {Elem{0, 1, 0}, Elem{0, 0, 1}});
    std::vector<Elem> seed = m_sub.gens;
    seed.insert(seed.end(), n_sub.gens.begin(), n_sub.gens.end());
    bool join_is_g = closure(h, std::move(seed)).order() == h.order();
    bool fits = fitting_check(h, m_sub, n_sub);
    body.expected = "two abelian normal subgroups of order 9, join = G, bound holds";
    body.actual = "|M|=" + std::to_string(m_sub.order()) +
                  " |N|=" + std::to_string(n_sub.order()) +
                  (join_is_g ? ", join = G" : ", join != G") +
                  (fits ? ", bound holds" : ", bound fails");
    body.passed = m_sub.order() == 9 && n_sub.order() == 9 && join_is_g && fits;
    return body;
  } else if (name == "truncation-witness") {
    body.expected = "nonabelian witness of order 6";
    try {
      TruncationWitness w = truncation_witness(2, 3, 5);
      bool ab = satisfies(w.group, parse_law("[x,y]")).verdict == Verdict::Holds;
      body.actual = (ab ? "abelian" : "nonabelian") + std::string(" witness of order ") +
                    std::to_string(w.group.order());
    } catch (const SearchExhaustedError&) {
      body.actual = "search exhausted";
    }
  } else {
    throw Error("unknown check: " + name);
  }
  body.passed = body.actual == body.expected;
  return body;
}

}  // namespace detail

// Runs exactly the selected named checks, in the canonical name order.
// Failures are rows with passed = false, never exceptions.
inline ReportTable verify_paper(const std::vector<std::string>& selection) {
  for (const std::string& s : selection) {
    const auto& names = paper_check_names();
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw Error("unknown check: " + s);
  }
  ReportTable table;
  for (const std::string& name : paper_check_names()) {
    if (std::find(selection.begin(), selection.end(), name) == selection.end())
      continue;
    ReportRow row;
    row.name = name;
    auto t0 = std::chrono::steady_clock::now();
    detail::CheckBody body = detail::run_paper_check(name);
    auto t1 = std::chrono::steady_clock::now();
    row.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    row.passed = body.passed;
    row.expected = body.expected;
    row.actual = body.actual;
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline ReportTable verify_paper_all() { return verify_paper(paper_check_names()); }

}  // namespace grouplaw
