#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "grouplaw/errors.hpp"
#include "grouplaw/freeword.hpp"

namespace grouplaw {

// Element a^alpha b^beta c^gamma of the free class-2 nilpotent group on a, b
// with c = [a,b] central.  Normal-form convention: ba = ab c^{-1}.
struct MalcevTriple {
  int64_t alpha = 0;
  int64_t beta = 0;
  int64_t gamma = 0;

  friend MalcevTriple operator*(const MalcevTriple& s, const MalcevTriple& t) {
    return {s.alpha + t.alpha, s.beta + t.beta,
            s.gamma + t.gamma - s.beta * t.alpha};
  }

  MalcevTriple inverse() const { return {-alpha, -beta, -gamma - alpha * beta}; }

  bool operator==(const MalcevTriple&) const = default;

  std::string str() const {
    return "(" + std::to_string(alpha) + "," + std::to_string(beta) + "," +
           std::to_string(gamma) + ")";
  }
};

// Image of a word over {a,b} in the free class-2 nilpotent group.
inline MalcevTriple nq2_eval(const FreeWord& w, const Alphabet& alpha) {
  MalcevTriple acc;
  for (int sym : w) {
    char name = alpha.name_of(std::abs(sym) - 1);
    MalcevTriple g;
    if (name == 'a')
      g = {1, 0, 0};
    else if (name == 'b')
      g = {0, 1, 0};
    else
      throw UnsupportedAlphabetError(
          std::string("letter '") + name + "' has no class-2 image; only a and b do");
    if (sym < 0) g = g.inverse();
    acc = acc * g;
  }
  return acc;
}

// Order of the image of c in the class-2 quotient of <a,b | relators>: every
// relator must land in the centre (zero exponent sums), and the relations
// kill exactly c^{gcd of the gamma values}.  Returns 0 for the infinite
// cyclic case (no relators, or all relators trivial in the quotient).
inline int64_t nq2_quotient_c_order(const std::vector<FreeWord>& relators,
                                    const Alphabet& alpha) {
  int64_t g = 0;
  for (std::size_t i = 0; i < relators.size(); ++i) {
    MalcevTriple t = nq2_eval(relators[i], alpha);
    if (t.alpha != 0 || t.beta != 0)
      throw NotCentralError("relator " + std::to_string(i) +
                            " has nonzero exponent sum " + t.str());
    g = std::gcd(g, t.gamma);
  }
  return g < 0 ? -g : g;
}

}  // namespace grouplaw
