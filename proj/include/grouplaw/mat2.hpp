#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>

#include "grouplaw/errors.hpp"

namespace grouplaw {

// Least nonnegative residue of a mod n (n >= 1), also for negative a.
inline int64_t mod_norm(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// 2x2 matrix over Z/n, entries stored row major and normalized to [0, n).
struct Mat2 {
  int64_t n = 1;
  std::array<int64_t, 4> a{0, 0, 0, 0};

  Mat2() = default;
  Mat2(int64_t mod, int64_t a00, int64_t a01, int64_t a10, int64_t a11)
      : n(mod),
        a{mod_norm(a00, mod), mod_norm(a01, mod), mod_norm(a10, mod),
          mod_norm(a11, mod)} {
    if (mod < 1) throw Error("matrix modulus must be >= 1");
  }
  Mat2(int64_t mod, const std::array<int64_t, 4>& e)
      : Mat2(mod, e[0], e[1], e[2], e[3]) {}

  static Mat2 identity(int64_t mod) { return Mat2(mod, 1, 0, 0, 1); }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  Mat2 operator*(const Mat2& o) const {
    if (n != o.n) throw Error("matrix modulus mismatch");
    return Mat2(n, a[0] * o.a[0] + a[1] * o.a[2], a[0] * o.a[1] + a[1] * o.a[3],
                a[2] * o.a[0] + a[3] * o.a[2], a[2] * o.a[1] + a[3] * o.a[3]);
  }

  int64_t det() const { return mod_norm(a[0] * a[3] - a[1] * a[2], n); }

  bool unit_det() const { return std::gcd(det(), n) == 1; }

  // Inverse via the adjugate; requires det to be a unit mod n.
  Mat2 inverse() const {
    int64_t d = det();
    int64_t di = inverse_unit(d, n);
    return Mat2(n, di * a[3], -di * a[1], -di * a[2], di * a[0]);
  }

  Mat2 pow(int64_t k) const {
    Mat2 base = k < 0 ? inverse() : *this;
    if (k < 0) k = -k;
    Mat2 acc = identity(n);
    while (k > 0) {
      if (k & 1) acc = acc * base;
      base = base * base;
      k >>= 1;
    }
    return acc;
  }

  std::string str() const {
    auto row = [&](int i) {
      return "[" + std::to_string(a[2 * i]) + "," + std::to_string(a[2 * i + 1]) +
             "]";
    };
    return "[" + row(0) + "," + row(1) + "] mod " + std::to_string(n);
  }

  // u^-1 mod n for gcd(u, n) = 1, via extended Euclid.
  static int64_t inverse_unit(int64_t u, int64_t n) {
    u = mod_norm(u, n);
    int64_t r0 = n, r1 = u, t0 = 0, t1 = 1;
    while (r1 != 0) {
      int64_t q = r0 / r1;
      r0 -= q * r1;
      std::swap(r0, r1);
      t0 -= q * t1;
      std::swap(t0, t1);
    }
    if (r0 != 1) throw Error("not a unit mod " + std::to_string(n));
    return mod_norm(t0, n);
  }
};

}  // namespace grouplaw
