#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "grouplaw/errors.hpp"

namespace grouplaw {

using Scalar = int32_t;

// Canonical element encoding: a fixed-width tuple of small integers.
// Carrier order, witness order and coset labels all use the lexicographic
// order of these tuples.
using Elem = std::vector<Scalar>;

inline std::string elem_str(const Elem& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

// Multiplication oracle for one family of encodings.  Works on raw
// coordinate spans so composite structures can delegate to their parts.
class GroupOps {
 public:
  virtual ~GroupOps() = default;
  virtual int width() const = 0;
  virtual void mul(const Scalar* a, const Scalar* b, Scalar* out) const = 0;
  virtual void inv(const Scalar* a, Scalar* out) const = 0;
  virtual void identity(Scalar* out) const = 0;
};

// Handle to a concrete finite group: an immutable sorted carrier, a
// generating set, and a shared multiplication oracle.  Copies are cheap.
class Group {
 public:
  Group() = default;
  Group(std::shared_ptr<const GroupOps> ops, std::vector<Elem> carrier,
        std::vector<Elem> gens, std::string descriptor)
      : ops_(std::move(ops)),
        carrier_(std::make_shared<std::vector<Elem>>(std::move(carrier))),
        gens_(std::move(gens)),
        descriptor_(std::move(descriptor)) {
    auto& c = *std::const_pointer_cast<std::vector<Elem>>(carrier_);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }

  std::size_t order() const { return carrier_->size(); }
  int width() const { return ops_->width(); }
  const std::string& descriptor() const { return descriptor_; }
  const std::vector<Elem>& generators() const { return gens_; }
  const std::vector<Elem>& carrier() const { return *carrier_; }
  const std::shared_ptr<const GroupOps>& ops() const { return ops_; }
  const Elem& element(std::size_t id) const { return (*carrier_)[id]; }

  Elem identity() const {
    Elem e(width());
    ops_->identity(e.data());
    return e;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    Elem out(width());
    ops_->mul(a.data(), b.data(), out.data());
    return out;
  }

  Elem inv(const Elem& a) const {
    Elem out(width());
    ops_->inv(a.data(), out.data());
    return out;
  }

  // g^h = h^-1 g h
  Elem conj(const Elem& g, const Elem& h) const {
    return mul(mul(inv(h), g), h);
  }

  // [g,h] = g^-1 h^-1 g h
  Elem comm(const Elem& g, const Elem& h) const {
    return mul(mul(inv(g), inv(h)), mul(g, h));
  }

  Elem pow(const Elem& g, int64_t k) const {
    Elem base = k < 0 ? inv(g) : g;
    if (k < 0) k = -k;
    Elem acc = identity();
    while (k > 0) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

  bool is_identity(const Elem& g) const { return g == identity(); }

  // Index into the sorted carrier, or -1 when absent.
  int index_of(const Elem& g) const {
    auto it = std::lower_bound(carrier_->begin(), carrier_->end(), g);
    if (it == carrier_->end() || *it != g) return -1;
    return static_cast<int>(it - carrier_->begin());
  }

  bool contains(const Elem& g) const { return index_of(g) >= 0; }

 private:
  std::shared_ptr<const GroupOps> ops_;
  std::shared_ptr<const std::vector<Elem>> carrier_;
  std::vector<Elem> gens_;
  std::string descriptor_;
};

// Multiplicative order of g; always finite here.
inline int64_t order_of(const Group& g_handle, const Elem& g) {
  Elem acc = g;
  const Elem e = g_handle.identity();
  int64_t n = 1;
  while (acc != e) {
    acc = g_handle.mul(acc, g);
    ++n;
  }
  return n;
}

}  // namespace grouplaw
