#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "grouplaw/errors.hpp"
#include "grouplaw/freeword.hpp"

namespace grouplaw {

struct Presentation {
  Alphabet alphabet;
  std::vector<FreeWord> relators;

  Presentation(Alphabet alpha, std::vector<FreeWord> rels)
      : alphabet(std::move(alpha)), relators(std::move(rels)) {
    for (std::size_t i = 0; i < relators.size(); ++i) {
      const FreeWord& r = relators[i];
      if (r.empty())
        throw Error("relator " + std::to_string(i) + " is empty");
      if (r != free_reduce(r))
        throw Error("relator " + std::to_string(i) + " is not reduced");
      for (int sym : r)
        if (std::abs(sym) < 1 || std::abs(sym) > alphabet.size())
          throw Error("relator " + std::to_string(i) +
                      " uses a letter outside the alphabet");
    }
  }

  const FreeWord& relator(std::size_t i) const { return relators[i]; }
};

// One conjugated relator factor: (relators[rel]^sign)^conj.
struct CertStep {
  int rel = 0;
  int sign = 1;
  FreeWord conj;
};

// Expresses a target word as a product of conjugated relators, witnessing
// membership in the normal closure of the relators.
struct Certificate {
  std::vector<CertStep> steps;
};

struct CheckResult {
  bool valid = true;
  std::size_t step = 0;     // offending step when invalid; steps.size() means
                            // the final comparison failed
  std::string reason;

  static CheckResult ok() { return {}; }
  static CheckResult bad(std::size_t at, std::string why) {
    return {false, at, std::move(why)};
  }
};

inline FreeWord certificate_value(const Presentation& pres,
                                  const Certificate& cert) {
  FreeWord acc;
  for (const CertStep& s : cert.steps) {
    FreeWord r = pres.relator(static_cast<std::size_t>(s.rel));
    if (s.sign < 0) r = free_inverse(r);
    acc = free_concat(acc, free_conj(r, s.conj));
  }
  return acc;
}

inline CheckResult check_certificate(const Presentation& pres,
                                     const FreeWord& target,
                                     const Certificate& cert) {
  FreeWord acc;
  for (std::size_t i = 0; i < cert.steps.size(); ++i) {
    const CertStep& s = cert.steps[i];
    if (s.rel < 0 || s.rel >= static_cast<int>(pres.relators.size()))
      return CheckResult::bad(i, "relator index out of range");
    if (s.sign != 1 && s.sign != -1)
      return CheckResult::bad(i, "sign must be +1 or -1");
    FreeWord r = pres.relator(static_cast<std::size_t>(s.rel));
    if (s.sign < 0) r = free_inverse(r);
    acc = free_concat(acc, free_conj(r, s.conj));
  }
  if (acc != free_reduce(target))
    return CheckResult::bad(cert.steps.size(),
                            "product of steps does not equal the target");
  return CheckResult::ok();
}

// One rewriting move: insert (relators[rel]^sign)^conj at offset pos of the
// current word and reduce; `declared` is the claimed outcome.
struct TraceStep {
  int64_t pos = 0;
  int rel = 0;
  int sign = 1;
  FreeWord conj;
  FreeWord declared;
};

// Witnesses that `start` and `end` represent the same element of the
// presented group, one relator insertion at a time.
struct DerivationTrace {
  FreeWord start;
  std::vector<TraceStep> steps;
  FreeWord end;
};

inline CheckResult check_trace(const Presentation& pres,
                               const DerivationTrace& trace) {
  FreeWord cur = free_reduce(trace.start);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    if (s.rel < 0 || s.rel >= static_cast<int>(pres.relators.size()))
      return CheckResult::bad(i, "relator index out of range");
    if (s.sign != 1 && s.sign != -1)
      return CheckResult::bad(i, "sign must be +1 or -1");
    if (s.pos < 0 || s.pos > static_cast<int64_t>(cur.size()))
      return CheckResult::bad(i, "insertion position out of range");
    FreeWord r = pres.relator(static_cast<std::size_t>(s.rel));
    if (s.sign < 0) r = free_inverse(r);
    FreeWord ins = free_conj(r, s.conj);
    FreeWord next(cur.begin(), cur.begin() + s.pos);
    next.insert(next.end(), ins.begin(), ins.end());
    next.insert(next.end(), cur.begin() + s.pos, cur.end());
    next = free_reduce(next);
    if (next != s.declared)
      return CheckResult::bad(i, "declared result does not match the insertion");
    cur = std::move(next);
  }
  if (cur != free_reduce(trace.end))
    return CheckResult::bad(trace.steps.size(),
                            "final word does not equal the declared end");
  return CheckResult::ok();
}

// The nine-relator two-generator-and-three-commuting-letters presentation
// used throughout the derivation suite.  Relator order is load-bearing:
// traces refer to relators by index.
inline const std::vector<std::string>& gamma_relator_names() {
  static const std::vector<std::string> names = {
      "[a,x]",  "[b,y]",   "[ab,z]",
      "[x,y]",  "[x,z]",   "[y,z]",
      "[ax,by]", "[ax,abz]", "[by,abz]"};
  return names;
}

inline Presentation gamma_presentation() {
  Alphabet alpha("abxyz");
  std::vector<FreeWord> relators;
  for (const std::string& r : gamma_relator_names())
    relators.push_back(parse_free_word(r, alpha));
  return Presentation(std::move(alpha), std::move(relators));
}

// ------------------------------------------------------------- file formats
//
// Presentation file:
//   alphabet: a b x y z
//   relators:
//   [a,x]
//   ...
//
// Certificate file (words use the presentation's alphabet):
//   target: <word>
//   step: rel=<int> sign=<+1|-1> conj=<word>
//
// Trace file (self-contained: embeds the presentation):
//   alphabet: ...
//   relators:
//   <one relator per line>
//   start: <word>
//   step: pos=<int> rel=<int> sign=<+1|-1> conj=<word> result=<word>
//   end: <word>
//
// Blank lines and lines starting with '#' are ignored.

namespace detail {

inline std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t a = line.find_first_not_of(" \t");
    if (a == std::string::npos) {
      out.push_back("");
      continue;
    }
    std::size_t b = line.find_last_not_of(" \t");
    out.push_back(line.substr(a, b - a + 1));
  }
  return out;
}

inline bool has_key(const std::string& line, const std::string& key,
                    std::string* rest) {
  if (line.compare(0, key.size(), key) != 0) return false;
  *rest = line.substr(key.size());
  std::size_t a = rest->find_first_not_of(" \t");
  *rest = a == std::string::npos ? "" : rest->substr(a);
  return true;
}

[[noreturn]] inline void line_error(std::size_t lineno, const std::string& why) {
  throw Error("line " + std::to_string(lineno + 1) + ": " + why);
}

inline FreeWord parse_word_at(const std::string& text, const Alphabet& alpha,
                              std::size_t lineno) {
  try {
    return parse_free_word(text, alpha);
  } catch (const SyntaxError& e) {
    line_error(lineno, e.what());
  }
}

// key=value tokens on a step line.
inline std::vector<std::pair<std::string, std::string>> step_fields(
    const std::string& rest, std::size_t lineno) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(rest);
  std::string tok;
  while (in >> tok) {
    std::size_t eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
      line_error(lineno, "expected key=value, got '" + tok + "'");
    out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return out;
}

inline int64_t parse_int_field(const std::string& v, const std::string& key,
                               std::size_t lineno) {
  try {
    std::size_t used = 0;
    int64_t x = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    line_error(lineno, key + " must be an integer, got '" + v + "'");
  }
}

struct ParsedHeader {
  Presentation pres;
  std::size_t next_line;  // first line after the relator block
};

inline ParsedHeader parse_header(const std::vector<std::string>& lines) {
  std::size_t i = 0;
  auto skip_blank = [&] {
    while (i < lines.size() && (lines[i].empty() || lines[i][0] == '#')) ++i;
  };
  skip_blank();
  std::string rest;
  if (i >= lines.size() || !has_key(lines[i], "alphabet:", &rest))
    line_error(i, "expected 'alphabet:'");
  Alphabet alpha;
  std::istringstream toks(rest);
  std::string tok;
  while (toks >> tok) {
    if (tok.size() != 1)
      throw UnsupportedAlphabetError("only single-character letters are supported, got '" +
                                     tok + "'");
    alpha.add(tok[0]);
  }
  if (alpha.size() == 0) line_error(i, "alphabet is empty");
  ++i;
  skip_blank();
  if (i >= lines.size() || !has_key(lines[i], "relators:", &rest))
    line_error(i, "expected 'relators:'");
  if (!rest.empty()) line_error(i, "'relators:' takes no inline value");
  ++i;
  std::vector<FreeWord> relators;
  for (; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    if (line.find(':') != std::string::npos &&
        (line.rfind("start:", 0) == 0 || line.rfind("end:", 0) == 0 ||
         line.rfind("step:", 0) == 0 || line.rfind("target:", 0) == 0))
      break;
    relators.push_back(parse_word_at(line, alpha, i));
  }
  return {Presentation(std::move(alpha), std::move(relators)), i};
}

}  // namespace detail

inline Presentation parse_presentation_text(const std::string& text) {
  auto lines = detail::content_lines(text);
  auto header = detail::parse_header(lines);
  for (std::size_t i = header.next_line; i < lines.size(); ++i)
    if (!lines[i].empty() && lines[i][0] != '#')
      detail::line_error(i, "unexpected content after the relator list");
  return std::move(header.pres);
}

inline std::pair<FreeWord, Certificate> parse_certificate_text(
    const std::string& text, const Alphabet& alpha) {
  auto lines = detail::content_lines(text);
  bool have_target = false;
  FreeWord target;
  Certificate cert;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    std::string rest;
    if (detail::has_key(line, "target:", &rest)) {
      if (have_target) detail::line_error(i, "duplicate 'target:'");
      target = detail::parse_word_at(rest, alpha, i);
      have_target = true;
    } else if (detail::has_key(line, "step:", &rest)) {
      if (!have_target) detail::line_error(i, "'step:' before 'target:'");
      CertStep s;
      bool saw_rel = false, saw_sign = false, saw_conj = false;
      for (auto& [k, v] : detail::step_fields(rest, i)) {
        if (k == "rel") {
          s.rel = static_cast<int>(detail::parse_int_field(v, k, i));
          saw_rel = true;
        } else if (k == "sign") {
          s.sign = static_cast<int>(detail::parse_int_field(v, k, i));
          saw_sign = true;
        } else if (k == "conj") {
          s.conj = detail::parse_word_at(v, alpha, i);
          saw_conj = true;
        } else {
          detail::line_error(i, "unknown field '" + k + "'");
        }
      }
      if (!saw_rel || !saw_sign || !saw_conj)
        detail::line_error(i, "step needs rel=, sign= and conj=");
      cert.steps.push_back(std::move(s));
    } else {
      detail::line_error(i, "expected 'target:' or 'step:'");
    }
  }
  if (!have_target) throw Error("certificate has no 'target:' line");
  return {std::move(target), std::move(cert)};
}

struct ParsedTrace {
  Presentation pres;
  DerivationTrace trace;
};

inline ParsedTrace parse_trace_text(const std::string& text) {
  auto lines = detail::content_lines(text);
  auto header = detail::parse_header(lines);
  const Alphabet& alpha = header.pres.alphabet;
  DerivationTrace trace;
  bool have_start = false, have_end = false;
  for (std::size_t i = header.next_line; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    std::string rest;
    if (detail::has_key(line, "start:", &rest)) {
      if (have_start) detail::line_error(i, "duplicate 'start:'");
      trace.start = detail::parse_word_at(rest, alpha, i);
      have_start = true;
    } else if (detail::has_key(line, "step:", &rest)) {
      if (!have_start) detail::line_error(i, "'step:' before 'start:'");
      if (have_end) detail::line_error(i, "'step:' after 'end:'");
      TraceStep s;
      bool saw_pos = false, saw_rel = false, saw_sign = false, saw_conj = false,
           saw_result = false;
      for (auto& [k, v] : detail::step_fields(rest, i)) {
        if (k == "pos") {
          s.pos = detail::parse_int_field(v, k, i);
          saw_pos = true;
        } else if (k == "rel") {
          s.rel = static_cast<int>(detail::parse_int_field(v, k, i));
          saw_rel = true;
        } else if (k == "sign") {
          s.sign = static_cast<int>(detail::parse_int_field(v, k, i));
          saw_sign = true;
        } else if (k == "conj") {
          s.conj = detail::parse_word_at(v, alpha, i);
          saw_conj = true;
        } else if (k == "result") {
          s.declared = detail::parse_word_at(v, alpha, i);
          saw_result = true;
        } else {
          detail::line_error(i, "unknown field '" + k + "'");
        }
      }
      if (!saw_pos || !saw_rel || !saw_sign || !saw_conj || !saw_result)
        detail::line_error(i, "step needs pos=, rel=, sign=, conj= and result=");
      trace.steps.push_back(std::move(s));
    } else if (detail::has_key(line, "end:", &rest)) {
      if (!have_start) detail::line_error(i, "'end:' before 'start:'");
      if (have_end) detail::line_error(i, "duplicate 'end:'");
      trace.end = detail::parse_word_at(rest, alpha, i);
      have_end = true;
    } else {
      detail::line_error(i, "expected 'start:', 'step:' or 'end:'");
    }
  }
  if (!have_start) throw Error("trace has no 'start:' line");
  if (!have_end) throw Error("trace has no 'end:' line");
  return {std::move(header.pres), std::move(trace)};
}

}  // namespace grouplaw
