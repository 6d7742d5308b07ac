#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grouplaw/series.hpp"
#include "grouplaw/subgroups.hpp"

namespace grouplaw {

// Syntax tree of a group word in variables x1, x2, ...  Inversion is
// represented as integer power -1, so the node kinds are variable, empty
// word, product, integer power, conjugation and commutator.
struct LawNode;
using Law = std::shared_ptr<const LawNode>;

struct LawNode {
  enum class Kind { Var, One, Product, Power, Conj, Comm };
  Kind kind;
  int var = 0;       // Kind::Var, 1-based
  int64_t exp = 0;   // Kind::Power
  std::vector<Law> kids;
};

inline Law law_var(int idx) {
  auto n = std::make_shared<LawNode>();
  n->kind = LawNode::Kind::Var;
  n->var = idx;
  return n;
}

inline Law law_one() {
  auto n = std::make_shared<LawNode>();
  n->kind = LawNode::Kind::One;
  return n;
}

inline Law law_product(std::vector<Law> kids) {
  if (kids.size() == 1) return kids[0];
  auto n = std::make_shared<LawNode>();
  n->kind = LawNode::Kind::Product;
  n->kids = std::move(kids);
  return n;
}

inline Law law_power(Law u, int64_t e) {
  auto n = std::make_shared<LawNode>();
  n->kind = LawNode::Kind::Power;
  n->exp = e;
  n->kids = {std::move(u)};
  return n;
}

inline Law law_inverse(Law u) { return law_power(std::move(u), -1); }

inline Law law_conj(Law u, Law v) {
  auto n = std::make_shared<LawNode>();
  n->kind = LawNode::Kind::Conj;
  n->kids = {std::move(u), std::move(v)};
  return n;
}

inline Law law_comm(Law u, Law v) {
  auto n = std::make_shared<LawNode>();
  n->kind = LawNode::Kind::Comm;
  n->kids = {std::move(u), std::move(v)};
  return n;
}

inline bool law_equal(const Law& a, const Law& b) {
  if (a->kind != b->kind || a->var != b->var || a->exp != b->exp ||
      a->kids.size() != b->kids.size())
    return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!law_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

// Largest variable index used.
inline int arity(const Law& w) {
  int k = w->kind == LawNode::Kind::Var ? w->var : 0;
  for (const Law& c : w->kids) k = std::max(k, arity(c));
  return k;
}

// ---------------------------------------------------------------- parsing

namespace detail {

class LawParser {
 public:
  explicit LawParser(const std::string& text) : s_(text) {}

  Law parse() {
    skip_ws();
    Law w = word();
    skip_ws();
    if (pos_ < s_.size())
      throw SyntaxError("unexpected trailing input", pos_);
    return w;
  }

 private:
  Law word() {
    std::vector<Law> factors;
    factors.push_back(factor());
    skip_ws();
    while (pos_ < s_.size() && starts_base()) {
      factors.push_back(factor());
      skip_ws();
    }
    return law_product(std::move(factors));
  }

  Law factor() {
    Law b = base();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size()) throw SyntaxError("missing exponent", pos_);
      char c = s_[pos_];
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
        return law_power(std::move(b), integer());
      return law_conj(std::move(b), base());
    }
    return b;
  }

  Law base() {
    if (pos_ >= s_.size()) throw SyntaxError("expected a word", pos_);
    char c = s_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      if (c == 'y') return law_var(2);
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t at = pos_;
        int64_t idx = digits();
        if (idx < 1) throw SyntaxError("variable index must be >= 1", at);
        return law_var(static_cast<int>(idx));
      }
      return law_var(1);
    }
    if (c == '1') {
      ++pos_;
      return law_one();
    }
    if (c == '(') {
      ++pos_;
      skip_ws();
      Law w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      skip_ws();
      Law u = word();
      expect(',');
      skip_ws();
      Law v = word();
      expect(']');
      return law_comm(std::move(u), std::move(v));
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  bool starts_base() const {
    char c = s_[pos_];
    return c == 'x' || c == 'y' || c == '1' || c == '(' || c == '[';
  }

  int64_t integer() {
    bool neg = false;
    if (s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw SyntaxError("expected digits", pos_);
    int64_t v = digits();
    return neg ? -v : v;
  }

  int64_t digits() {
    int64_t v = 0;
    std::size_t at = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000) throw SyntaxError("number too large", at);
      ++pos_;
    }
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Law parse_law(const std::string& text) {
  return detail::LawParser(text).parse();
}

// ---------------------------------------------------------------- printing

namespace detail {

inline std::string law_str(const Law& w);

inline std::string var_name(int idx) {
  if (idx == 1) return "x";
  if (idx == 2) return "y";
  return "x" + std::to_string(idx);
}

// A string usable where the grammar wants a single base.
inline std::string base_str(const Law& w) {
  switch (w->kind) {
    case LawNode::Kind::Var:
      return var_name(w->var);
    case LawNode::Kind::One:
      return "1";
    case LawNode::Kind::Comm:
      return "[" + law_str(w->kids[0]) + "," + law_str(w->kids[1]) + "]";
    default:
      return "(" + law_str(w) + ")";
  }
}

inline std::string factor_str(const Law& w) {
  switch (w->kind) {
    case LawNode::Kind::Power:
      return base_str(w->kids[0]) + "^" + std::to_string(w->exp);
    case LawNode::Kind::Conj:
      // "^1" would re-parse as an integer power, so wrap an empty-word
      // conjugator in parens
      return base_str(w->kids[0]) + "^" +
             (w->kids[1]->kind == LawNode::Kind::One
                  ? "(1)"
                  : base_str(w->kids[1]));
    case LawNode::Kind::Product:
      return "(" + law_str(w) + ")";
    default:
      return base_str(w);
  }
}

inline std::string law_str(const Law& w) {
  if (w->kind == LawNode::Kind::Product) {
    std::string out;
    for (const Law& c : w->kids) {
      std::string fs = factor_str(c);
      // "x3" + "1" would re-lex as the variable x31, and "x^2" + "1" as the
      // power x^21, so a 1-leading factor gets parens after an alnum tail
      if (!out.empty() && fs.front() == '1' &&
          std::isalnum(static_cast<unsigned char>(out.back())))
        fs = "(" + fs + ")";
      out += fs;
    }
    return out;
  }
  return factor_str(w);
}

}  // namespace detail

inline std::string print_law(const Law& w) { return detail::law_str(w); }

// ---------------------------------------------------------------- evaluation

// Substitute tuple[i-1] for x_i and evaluate in G.
inline Elem evaluate(const Law& w, const Group& g,
                     const std::vector<Elem>& tuple) {
  switch (w->kind) {
    case LawNode::Kind::Var:
      if (static_cast<std::size_t>(w->var) > tuple.size())
        throw ArityMismatchError("law uses x" + std::to_string(w->var) +
                                 " but the tuple has " +
                                 std::to_string(tuple.size()) + " entries");
      return tuple[static_cast<std::size_t>(w->var - 1)];
    case LawNode::Kind::One:
      return g.identity();
    case LawNode::Kind::Product: {
      Elem acc = g.identity();
      for (const Law& c : w->kids) acc = g.mul(acc, evaluate(c, g, tuple));
      return acc;
    }
    case LawNode::Kind::Power:
      return g.pow(evaluate(w->kids[0], g, tuple), w->exp);
    case LawNode::Kind::Conj:
      return g.conj(evaluate(w->kids[0], g, tuple),
                    evaluate(w->kids[1], g, tuple));
    case LawNode::Kind::Comm:
      return g.comm(evaluate(w->kids[0], g, tuple),
                    evaluate(w->kids[1], g, tuple));
  }
  throw Error("unreachable law node kind");
}

// ---------------------------------------------------------------- law families

// E_0 = x, E_{k+1} = [E_k, y].
inline Law engel_word(int k) {
  if (k < 0) throw Error("engel_word needs k >= 0");
  Law w = law_var(1);
  for (int i = 0; i < k; ++i) w = law_comm(w, law_var(2));
  return w;
}

// Left-normed commutator [[..[x1,x2],..], x_{c+1}] on c+1 variables.
inline Law nilpotency_word(int c) {
  if (c < 1) throw Error("nilpotency_word needs c >= 1");
  Law w = law_comm(law_var(1), law_var(2));
  for (int i = 3; i <= c + 1; ++i) w = law_comm(w, law_var(i));
  return w;
}

inline Law burnside_word(int64_t m) {
  if (m < 1) throw Error("burnside_word needs m >= 1");
  return law_power(law_var(1), m);
}

inline Law metabelian_word() {
  return law_comm(law_comm(law_var(1), law_var(2)),
                  law_comm(law_var(3), law_var(4)));
}

// ---------------------------------------------------------------- satisfaction

enum class Verdict { Holds, Fails, Unknown };

struct SatisfactionResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<Elem> witness;  // a failing tuple when verdict == Fails
  std::string strategy;
  uint64_t tuples_examined = 0;
};

struct Exhaustive {
  uint64_t budget = 10000000;
};
struct Structural {};
struct Auto {
  uint64_t budget = 10000000;
};
using Strategy = std::variant<Exhaustive, Structural, Auto>;

namespace detail {

// The chain of variables of a left-normed commutator [[..[v1,v2],v3..],vm],
// or empty if the tree has any other shape.
inline std::vector<int> left_normed_chain(const Law& w) {
  std::vector<int> rev;
  const LawNode* cur = w.get();
  while (cur->kind == LawNode::Kind::Comm &&
         cur->kids[1]->kind == LawNode::Kind::Var) {
    rev.push_back(cur->kids[1]->var);
    if (cur->kids[0]->kind == LawNode::Kind::Var) {
      rev.push_back(cur->kids[0]->var);
      std::vector<int> out(rev.rbegin(), rev.rend());
      return out;
    }
    cur = cur->kids[0].get();
  }
  return {};
}

inline bool all_distinct(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

inline SatisfactionResult exhaustive_scan(const Group& g, const Law& w,
                                          uint64_t budget,
                                          const std::string& label) {
  SatisfactionResult r;
  r.strategy = label;
  int k = arity(w);
  uint64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > budget / g.order()) {
      // |G|^k exceeds the budget; an incomplete scan proves nothing
      r.verdict = Verdict::Unknown;
      return r;
    }
    total *= g.order();
  }

  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  std::vector<Elem> tuple(static_cast<std::size_t>(k), g.identity());
  for (int i = 0; i < k; ++i)
    tuple[static_cast<std::size_t>(i)] = g.element(0);
  const Elem e = g.identity();
  for (;;) {
    ++r.tuples_examined;
    if (evaluate(w, g, tuple) != e) {
      r.verdict = Verdict::Fails;
      r.witness = tuple;
      return r;
    }
    int i = k;
    while (i > 0) {
      --i;
      std::size_t ii = static_cast<std::size_t>(i);
      if (++idx[ii] < g.order()) {
        tuple[ii] = g.element(idx[ii]);
        break;
      }
      idx[ii] = 0;
      tuple[ii] = g.element(0);
      if (i == 0) {
        r.verdict = Verdict::Holds;
        return r;
      }
    }
    if (k == 0) {
      r.verdict = Verdict::Holds;
      return r;
    }
  }
}

// Least pair (g1,g2) with [g1,g2] != e.
inline std::vector<Elem> least_noncommuting_pair(const Group& g) {
  const Elem e = g.identity();
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      if (g.comm(g.element(i), g.element(j)) != e)
        return {g.element(i), g.element(j)};
  return {};
}

// Least (g1,g2,g3,g4) with [[g1,g2],[g3,g4]] != e, assuming one exists.
// A pair (g1,g2) can start a witness iff [g1,g2] fails to centralize the
// derived subgroup (commutators generate it).
inline std::vector<Elem> least_metabelian_witness(const Group& g) {
  Subgroup d = derived_subgroup(g);
  const Elem e = g.identity();
  auto centralizes = [&](const Elem& u) {
    for (const Elem& w : d.gens)
      if (g.comm(u, w) != e) return false;
    return true;
  };
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) {
      Elem u = g.comm(g.element(i), g.element(j));
      if (centralizes(u)) continue;
      for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) {
          Elem v = g.comm(g.element(a), g.element(b));
          if (g.comm(u, v) != e)
            return {g.element(i), g.element(j), g.element(a), g.element(b)};
        }
    }
  return {};
}

// Least tuple witnessing failure of the class-c law, via reachability sets:
// S_0 = non-identity elements, S_j = {u : exists h with [u,h] in S_{j-1}}.
inline std::vector<Elem> least_nilpotency_witness(const Group& g, int c) {
  const Elem e = g.identity();
  std::size_t n = g.order();
  std::vector<std::vector<char>> s(static_cast<std::size_t>(c));
  s[0].assign(n, 1);
  s[0][static_cast<std::size_t>(g.index_of(e))] = 0;
  for (int j = 1; j < c; ++j) {
    s[static_cast<std::size_t>(j)].assign(n, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t h = 0; h < n; ++h) {
        int id = g.index_of(g.comm(g.element(u), g.element(h)));
        if (s[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(id)]) {
          s[static_cast<std::size_t>(j)][u] = 1;
          break;
        }
      }
  }
  std::vector<Elem> tuple;
  Elem cur;
  // first two coordinates
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i)
    for (std::size_t j = 0; j < n && !found; ++j) {
      Elem v = g.comm(g.element(i), g.element(j));
      if (s[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(g.index_of(v))]) {
        tuple = {g.element(i), g.element(j)};
        cur = v;
        found = true;
      }
    }
  if (!found) return {};
  for (int j = c - 2; j >= 0; --j) {
    for (std::size_t h = 0; h < n; ++h) {
      Elem v = g.comm(cur, g.element(h));
      if (s[static_cast<std::size_t>(j)][static_cast<std::size_t>(g.index_of(v))]) {
        tuple.push_back(g.element(h));
        cur = v;
        break;
      }
    }
  }
  return tuple;
}

inline SatisfactionResult structural_satisfies(const Group& g, const Law& w) {
  SatisfactionResult r;
  r.strategy = "structural";

  // x^m: holds iff exponent divides m
  if (w->kind == LawNode::Kind::Power &&
      w->kids[0]->kind == LawNode::Kind::Var && w->exp >= 1) {
    int64_t m = w->exp;
    if (m % exponent(g) == 0) {
      r.verdict = Verdict::Holds;
      return r;
    }
    const Elem e = g.identity();
    for (std::size_t i = 0; i < g.order(); ++i)
      if (g.pow(g.element(i), m) != e) {
        r.verdict = Verdict::Fails;
        r.witness = {g.element(i)};
        return r;
      }
    r.verdict = Verdict::Holds;  // unreachable: exponent divides m otherwise
    return r;
  }

  // [[x1,x2],[x3,x4]]: holds iff the second derived subgroup is trivial
  if (w->kind == LawNode::Kind::Comm) {
    std::vector<int> lu = left_normed_chain(w->kids[0]);
    std::vector<int> lv = left_normed_chain(w->kids[1]);
    if (lu.size() == 2 && lv.size() == 2) {
      std::vector<int> all{lu[0], lu[1], lv[0], lv[1]};
      if (all_distinct(all)) {
        Subgroup d = derived_subgroup(g);
        Subgroup dd = commutator_subgroup(g, d, d);
        if (dd.order() == 1) {
          r.verdict = Verdict::Holds;
        } else {
          r.verdict = Verdict::Fails;
          r.witness = least_metabelian_witness(g);
        }
        return r;
      }
    }
  }

  std::vector<int> chain = left_normed_chain(w);
  if (chain.size() >= 2) {
    // nu_c: left-normed, all variables distinct
    if (all_distinct(chain)) {
      int c = static_cast<int>(chain.size()) - 1;
      std::vector<Subgroup> lcs = lower_central_series(g);
      bool nilp = lcs.back().order() == 1;
      if (nilp && static_cast<int>(lcs.size()) - 1 <= c) {
        r.verdict = Verdict::Holds;
      } else {
        r.verdict = Verdict::Fails;
        r.witness = least_nilpotency_witness(g, c);
      }
      return r;
    }
    // k-Engel: [x,y,y,...,y]; complete after scanning pairs only
    bool engel = chain[0] != chain[1];
    for (std::size_t i = 2; i < chain.size(); ++i)
      if (chain[i] != chain[1]) engel = false;
    if (engel) {
      const Elem e = g.identity();
      int k = static_cast<int>(chain.size()) - 1;
      for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j) {
          ++r.tuples_examined;
          Elem acc = g.element(i);
          const Elem h = g.element(j);
          for (int t = 0; t < k; ++t) acc = g.comm(acc, h);
          if (acc != e) {
            r.verdict = Verdict::Fails;
            r.witness = {g.element(i), g.element(j)};
            return r;
          }
        }
      r.verdict = Verdict::Holds;
      return r;
    }
  }

  r.verdict = Verdict::Unknown;
  return r;
}

}  // namespace detail

inline SatisfactionResult satisfies(const Group& g, const Law& w,
                                    Strategy strategy = Auto{}) {
  if (std::holds_alternative<Exhaustive>(strategy))
    return detail::exhaustive_scan(g, w, std::get<Exhaustive>(strategy).budget,
                                   "exhaustive");
  if (std::holds_alternative<Structural>(strategy))
    return detail::structural_satisfies(g, w);
  SatisfactionResult r = detail::structural_satisfies(g, w);
  if (r.verdict != Verdict::Unknown) return r;
  return detail::exhaustive_scan(g, w, std::get<Auto>(strategy).budget,
                                 "exhaustive");
}

inline SatisfactionResult satisfies(const Subgroup& h, const Law& w,
                                    Strategy strategy = Auto{}) {
  return satisfies(h.as_group(), w, strategy);
}

}  // namespace grouplaw
