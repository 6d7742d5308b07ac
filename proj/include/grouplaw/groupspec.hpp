#pragma once

#include <array>
#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grouplaw/constructions.hpp"
#include "grouplaw/errors.hpp"
#include "grouplaw/group.hpp"

namespace grouplaw {

// Mini-language for naming groups on the command line:
//   Z(9)   prod(Z(9),Z(9))   heis3   hol(7)   dih(6)   sym(4)   U(9)
//   sd(N, K; g1=[[a,b],[c,d]], ...)   W4374
// sd takes one 2x2 integer matrix (mod N's two cyclic moduli) per generator
// of K, in K's generator order; the names before '=' are labels.
class GroupSpecParser {
 public:
  explicit GroupSpecParser(const std::string& text) : s_(text) {}

  Group parse() {
    skip_ws();
    Parsed p = spec();
    skip_ws();
    if (pos_ < s_.size())
      throw SyntaxError("unexpected trailing input", pos_);
    return std::move(p.group);
  }

 private:
  struct Parsed {
    Group group;
    // set when the group is prod(Z(r1), Z(r2)): matrix actions need this
    std::optional<std::pair<int64_t, int64_t>> two_cyclic;
  };

  Parsed spec() {
    skip_ws();
    std::size_t at = pos_;
    std::string name = ident();
    if (name.empty()) throw SyntaxError("expected a group spec", at);
    if (name == "Z") return {cyclic(int_arg()), std::nullopt};
    if (name == "hol") return {holomorph_cyclic(int_arg()), std::nullopt};
    if (name == "dih") return {dihedral(int_arg()), std::nullopt};
    if (name == "sym")
      return {symmetric_group(static_cast<int>(int_arg())), std::nullopt};
    if (name == "U") return {units_mod(int_arg()), std::nullopt};
    if (name == "heis3") return {heisenberg3(), std::nullopt};
    if (name == "W4374") return {build_W(), std::nullopt};
    if (name == "prod") return product();
    if (name == "sd") return semidirect_spec();
    throw SyntaxError("unknown group constructor '" + name + "'", at);
  }

  Parsed product() {
    expect('(');
    std::vector<Parsed> parts;
    parts.push_back(spec());
    while (peek() == ',') {
      ++pos_;
      parts.push_back(spec());
    }
    expect(')');
    std::vector<Group> groups;
    for (Parsed& p : parts) groups.push_back(std::move(p.group));
    Parsed out{direct_product(groups), std::nullopt};
    // remember the moduli when this is exactly a pair of cyclic groups
    if (parts.size() == 2) {
      auto modulus = [](const Group& g) -> std::optional<int64_t> {
        const std::string& d = g.descriptor();
        if (d.rfind("Z(", 0) != 0) return std::nullopt;
        return static_cast<int64_t>(g.order());
      };
      auto r1 = modulus(groups[0]), r2 = modulus(groups[1]);
      if (r1 && r2) out.two_cyclic = std::make_pair(*r1, *r2);
    }
    return out;
  }

  Parsed semidirect_spec() {
    expect('(');
    Parsed n = spec();
    expect(',');
    Parsed k = spec();
    expect(';');
    if (!n.two_cyclic)
      throw SyntaxError("matrix actions need N = prod(Z(r1),Z(r2))", pos_);
    auto [r1, r2] = *n.two_cyclic;
    ActionSpec action;
    std::size_t gen_index = 0;
    const std::vector<Elem>& k_gens = k.group.generators();
    while (true) {
      skip_ws();
      std::size_t at = pos_;
      std::string label = ident();
      if (label.empty()) throw SyntaxError("expected an action label", at);
      expect('=');
      std::array<int64_t, 4> m = matrix();
      if (gen_index >= k_gens.size())
        throw SyntaxError("more actions than K has generators", at);
      action.gens.push_back(
          GeneratorAction{k_gens[gen_index], linear_action(m, r1, r2)});
      ++gen_index;
      skip_ws();
      if (peek() != ',') break;
      ++pos_;
    }
    expect(')');
    if (gen_index != k_gens.size())
      throw SyntaxError("need one action per K generator (" +
                            std::to_string(k_gens.size()) + ")",
                        pos_);
    return {semidirect(n.group, k.group, action), std::nullopt};
  }

  // [[a,b],[c,d]]
  std::array<int64_t, 4> matrix() {
    std::array<int64_t, 4> m{};
    expect('[');
    expect('[');
    m[0] = integer();
    expect(',');
    m[1] = integer();
    expect(']');
    expect(',');
    expect('[');
    m[2] = integer();
    expect(',');
    m[3] = integer();
    expect(']');
    expect(']');
    return m;
  }

  int64_t int_arg() {
    expect('(');
    int64_t v = integer();
    expect(')');
    return v;
  }

  std::string ident() {
    skip_ws();
    std::string out;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_'))
      out.push_back(s_[pos_++]);
    return out;
  }

  int64_t integer() {
    skip_ws();
    std::size_t at = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw SyntaxError("expected an integer", at);
    int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

inline Group parse_group_spec(const std::string& text) {
  return GroupSpecParser(text).parse();
}

}  // namespace grouplaw
