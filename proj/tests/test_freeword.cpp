#include <random>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "grouplaw/errors.hpp"
#include "grouplaw/freeword.hpp"

using namespace grouplaw;

namespace {

FreeWord random_raw_word(std::mt19937& rng, int n_letters, int len) {
  std::uniform_int_distribution<int> letter(1, n_letters);
  std::uniform_int_distribution<int> coin(0, 1);
  FreeWord w;
  for (int i = 0; i < len; ++i) {
    int s = letter(rng);
    w.push_back(coin(rng) ? s : -s);
  }
  return w;
}

// Reference reducer: rescan from the top after every cancellation.
FreeWord slow_reduce(FreeWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + i, w.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace

TEST_CASE("free reduction cancels inverse pairs") {
  Alphabet ab("ab");
  FreeWord w = parse_free_word("aa^-1", ab);
  CHECK(w.empty());
  CHECK(parse_free_word("ab^-1ba^-1", ab).empty());
  CHECK(parse_free_word("aba^-1", ab) == FreeWord{1, 2, -1});

  std::mt19937 rng(91101);
  for (int t = 0; t < 300; ++t) {
    FreeWord raw = random_raw_word(rng, 3, t % 40);
    FreeWord r = free_reduce(raw);
    CHECK(r == slow_reduce(raw));
    CHECK(free_reduce(r) == r);  // idempotent
    CHECK((raw.size() - r.size()) % 2 == 0);
  }
}

TEST_CASE("reduction is invariant under inserting a cancelling pair") {
  std::mt19937 rng(4507);
  std::uniform_int_distribution<int> letter(1, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 200; ++t) {
    FreeWord w = random_raw_word(rng, 4, 18);
    std::uniform_int_distribution<std::size_t> at(0, w.size());
    std::size_t pos = at(rng);
    int s = letter(rng) * (coin(rng) ? 1 : -1);
    FreeWord padded = w;
    padded.insert(padded.begin() + pos, {s, -s});
    CHECK(free_reduce(padded) == free_reduce(w));
  }
}

TEST_CASE("word algebra helpers") {
  std::mt19937 rng(7717);
  for (int t = 0; t < 150; ++t) {
    FreeWord u = free_reduce(random_raw_word(rng, 3, 12));
    FreeWord v = free_reduce(random_raw_word(rng, 3, 12));
    CHECK(free_concat(u, free_inverse(u)).empty());
    CHECK(free_inverse(free_concat(u, v)) ==
          free_concat(free_inverse(v), free_inverse(u)));
    CHECK(free_comm(u, v) == free_inverse(free_comm(v, u)));
    CHECK(free_conj(u, v) ==
          free_concat(free_inverse(v), free_concat(u, v)));
    CHECK(free_pow(u, 3) == free_concat(u, free_concat(u, u)));
    CHECK(free_pow(u, -2) == free_inverse(free_pow(u, 2)));
    CHECK(free_pow(u, 0).empty());
  }
}

TEST_CASE("exponent sums") {
  Alphabet ab("ab");
  FreeWord w = parse_free_word("a^3b^-1a^-1b^2", ab);
  CHECK(exponent_sum(w, 0) == 2);
  CHECK(exponent_sum(w, 1) == 1);
  CHECK(exponent_sum(free_comm(parse_free_word("ab", ab),
                               parse_free_word("ba", ab)),
                     0) == 0);
}

TEST_CASE("substitution is a homomorphism") {
  Alphabet abz("abz");
  std::vector<FreeWord> images = {
      parse_free_word("b", abz),         // a -> b
      parse_free_word("a", abz),         // b -> a
      parse_free_word("a^-1za", abz),    // z -> z^a
  };

  CHECK(apply_substitution(parse_free_word("[ab,z]", abz), images) ==
        parse_free_word("[ba,z^a]", abz));

  FreeWord z2 = apply_substitution(apply_substitution({3}, images), images);
  CHECK(z2 == parse_free_word("z^(ab)", abz));

  std::mt19937 rng(33211);
  for (int t = 0; t < 150; ++t) {
    FreeWord u = free_reduce(random_raw_word(rng, 3, 10));
    FreeWord v = free_reduce(random_raw_word(rng, 3, 10));
    CHECK(apply_substitution(free_concat(u, v), images) ==
          free_concat(apply_substitution(u, images),
                      apply_substitution(v, images)));
    CHECK(apply_substitution(free_inverse(u), images) ==
          free_inverse(apply_substitution(u, images)));
  }
}

TEST_CASE("free word parsing") {
  Alphabet abxyz("abxyz");
  CHECK(parse_free_word("1", abxyz).empty());
  CHECK(parse_free_word("  a  b ", abxyz) == FreeWord{1, 2});
  CHECK(parse_free_word("[a,x]", abxyz) == FreeWord{-1, -3, 1, 3});
  CHECK(parse_free_word("a^-1x^-1ax", abxyz) == FreeWord{-1, -3, 1, 3});
  CHECK(parse_free_word("(ab)^2", abxyz) == FreeWord{1, 2, 1, 2});
  CHECK(parse_free_word("z^(ab)", abxyz) == FreeWord{-2, -1, 5, 1, 2});
  CHECK(parse_free_word("a^0", abxyz).empty());
  CHECK(parse_free_word("[ax,by]", abxyz) ==
        free_comm(FreeWord{1, 3}, FreeWord{2, 4}));

  auto pos_of = [&](const std::string& text) {
    try {
      parse_free_word(text, abxyz);
    } catch (const SyntaxError& e) {
      return e.pos;
    }
    return std::size_t(9999);
  };
  CHECK(pos_of("") == 0);
  CHECK(pos_of("q") == 0);
  CHECK(pos_of("aq") == 1);
  CHECK(pos_of("a^") == 2);
  CHECK(pos_of("[a,b") == 4);
  CHECK(pos_of("(ab") == 3);
}

TEST_CASE("free word printing round-trips") {
  Alphabet abxyz("abxyz");
  CHECK(free_word_str({}, abxyz) == "1");
  CHECK(free_word_str(parse_free_word("[a,x]", abxyz), abxyz) == "a^-1x^-1ax");
  CHECK(free_word_str(parse_free_word("a^3b^-2", abxyz), abxyz) == "a^3b^-2");

  std::mt19937 rng(561);
  for (int t = 0; t < 200; ++t) {
    FreeWord w = free_reduce(random_raw_word(rng, 5, 20));
    CHECK(parse_free_word(free_word_str(w, abxyz), abxyz) == w);
  }
}
