#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grouplaw/errors.hpp"

namespace grouplaw {

// Word in a free group: letter i of the alphabet appears as +(i+1), its
// inverse as -(i+1).
using FreeWord = std::vector<int>;

struct Alphabet {
  std::vector<char> letters;

  explicit Alphabet(const std::string& names = "") {
    for (char c : names) add(c);
  }

  void add(char c) {
    if (id_of(c) >= 0) throw Error(std::string("duplicate letter '") + c + "'");
    letters.push_back(c);
  }

  int size() const { return static_cast<int>(letters.size()); }

  int id_of(char c) const {
    for (std::size_t i = 0; i < letters.size(); ++i)
      if (letters[i] == c) return static_cast<int>(i);
    return -1;
  }

  char name_of(int id) const { return letters[static_cast<std::size_t>(id)]; }
};

// Cancel adjacent inverse pairs until none remain.
inline FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int s : w) {
    if (!out.empty() && out.back() == -s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline FreeWord free_concat(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

inline FreeWord free_pow(const FreeWord& w, int64_t k) {
  FreeWord base = k < 0 ? free_inverse(w) : w;
  if (k < 0) k = -k;
  FreeWord out;
  for (int64_t i = 0; i < k; ++i)
    out.insert(out.end(), base.begin(), base.end());
  return free_reduce(out);
}

// c^{-1} w c
inline FreeWord free_conj(const FreeWord& w, const FreeWord& c) {
  FreeWord out = free_inverse(c);
  out.insert(out.end(), w.begin(), w.end());
  out.insert(out.end(), c.begin(), c.end());
  return free_reduce(out);
}

// u^{-1} v^{-1} u v
inline FreeWord free_comm(const FreeWord& u, const FreeWord& v) {
  FreeWord out = free_inverse(u);
  FreeWord vi = free_inverse(v);
  out.insert(out.end(), vi.begin(), vi.end());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return free_reduce(out);
}

inline int64_t exponent_sum(const FreeWord& w, int letter_id) {
  int64_t s = 0;
  for (int sym : w) {
    if (sym == letter_id + 1) ++s;
    if (sym == -(letter_id + 1)) --s;
  }
  return s;
}

// Homomorphic substitution: each letter maps to a word (images indexed by
// letter id), inverses map to inverse images; the result is reduced.
inline FreeWord apply_substitution(const FreeWord& w,
                                   const std::vector<FreeWord>& images) {
  FreeWord out;
  for (int sym : w) {
    int id = std::abs(sym) - 1;
    if (static_cast<std::size_t>(id) >= images.size())
      throw Error("substitution map missing a letter");
    const FreeWord& img = images[static_cast<std::size_t>(id)];
    if (sym > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it)
        out.push_back(-*it);
    }
  }
  return free_reduce(out);
}

// ---------------------------------------------------------------- text form

// Same grammar as laws (word := factor+, factor := base ('^' exp)?, base :=
// LETTER | '1' | parens | commutator), but atoms are alphabet letters.
namespace detail {

class FreeWordParser {
 public:
  FreeWordParser(const std::string& text, const Alphabet& alpha)
      : s_(text), alpha_(alpha) {}

  FreeWord parse() {
    skip_ws();
    FreeWord w = word();
    skip_ws();
    if (pos_ < s_.size()) throw SyntaxError("unexpected trailing input", pos_);
    return free_reduce(w);
  }

 private:
  FreeWord word() {
    FreeWord out = factor();
    skip_ws();
    while (pos_ < s_.size() && starts_base()) {
      FreeWord f = factor();
      out.insert(out.end(), f.begin(), f.end());
      skip_ws();
    }
    return out;
  }

  FreeWord factor() {
    FreeWord b = base();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      if (pos_ >= s_.size()) throw SyntaxError("missing exponent", pos_);
      char c = s_[pos_];
      if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
        return free_pow(b, integer());
      return free_conj(b, base());
    }
    return b;
  }

  FreeWord base() {
    if (pos_ >= s_.size()) throw SyntaxError("expected a word", pos_);
    char c = s_[pos_];
    if (c == '1') {
      ++pos_;
      return {};
    }
    if (c == '(') {
      ++pos_;
      skip_ws();
      FreeWord w = word();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      skip_ws();
      FreeWord u = word();
      expect(',');
      skip_ws();
      FreeWord v = word();
      expect(']');
      return free_comm(u, v);
    }
    int id = alpha_.id_of(c);
    if (id < 0)
      throw SyntaxError(std::string("letter '") + c + "' is not in the alphabet",
                        pos_);
    ++pos_;
    return {id + 1};
  }

  bool starts_base() const {
    char c = s_[pos_];
    return c == '1' || c == '(' || c == '[' || alpha_.id_of(c) >= 0;
  }

  int64_t integer() {
    bool neg = false;
    if (s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw SyntaxError("expected digits", pos_);
    int64_t v = 0;
    std::size_t at = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000) throw SyntaxError("exponent too large", at);
      ++pos_;
    }
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  const std::string& s_;
  const Alphabet& alpha_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline FreeWord parse_free_word(const std::string& text,
                                const Alphabet& alpha) {
  return detail::FreeWordParser(text, alpha).parse();
}

// Run-compressed text form, e.g. a^-1x^-1ax; the empty word prints as 1.
inline std::string free_word_str(const FreeWord& w, const Alphabet& alpha) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int64_t run = static_cast<int64_t>(j - i) * (w[i] > 0 ? 1 : -1);
    out += alpha.name_of(std::abs(w[i]) - 1);
    if (run != 1) out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace grouplaw
