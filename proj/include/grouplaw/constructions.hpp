#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "grouplaw/mat2.hpp"
#include "grouplaw/series.hpp"
#include "grouplaw/subgroups.hpp"

namespace grouplaw {

// ---------------------------------------------------------------- cyclic

class CyclicOps : public GroupOps {
 public:
  explicit CyclicOps(int64_t n) : n_(n) {}
  int width() const override { return 1; }
  void mul(const Scalar* a, const Scalar* b, Scalar* out) const override {
    out[0] = static_cast<Scalar>((a[0] + b[0]) % n_);
  }
  void inv(const Scalar* a, Scalar* out) const override {
    out[0] = static_cast<Scalar>((n_ - a[0]) % n_);
  }
  void identity(Scalar* out) const override { out[0] = 0; }

 private:
  int64_t n_;
};

inline Group cyclic(int64_t n) {
  if (n < 1) throw Error("cyclic group order must be >= 1");
  std::vector<Elem> carrier;
  carrier.reserve(static_cast<std::size_t>(n));
  for (int64_t i = 0; i < n; ++i) carrier.push_back({static_cast<Scalar>(i)});
  std::vector<Elem> gens;
  if (n > 1) gens.push_back({1});
  return Group(std::make_shared<CyclicOps>(n), std::move(carrier),
               std::move(gens), "Z(" + std::to_string(n) + ")");
}

// ---------------------------------------------------------------- products

class ProductOps : public GroupOps {
 public:
  explicit ProductOps(std::vector<Group> parts) : parts_(std::move(parts)) {
    int off = 0;
    for (const Group& p : parts_) {
      offsets_.push_back(off);
      off += p.width();
    }
    width_ = off;
  }
  int width() const override { return width_; }
  void mul(const Scalar* a, const Scalar* b, Scalar* out) const override {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      int o = offsets_[i];
      parts_[i].ops()->mul(a + o, b + o, out + o);
    }
  }
  void inv(const Scalar* a, Scalar* out) const override {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      int o = offsets_[i];
      parts_[i].ops()->inv(a + o, out + o);
    }
  }
  void identity(Scalar* out) const override {
    for (std::size_t i = 0; i < parts_.size(); ++i)
      parts_[i].ops()->identity(out + offsets_[i]);
  }

 private:
  std::vector<Group> parts_;
  std::vector<int> offsets_;
  int width_ = 0;
};

inline Group direct_product(const std::vector<Group>& parts) {
  if (parts.empty()) throw Error("direct product needs at least one factor");
  if (parts.size() == 1) return parts[0];
  int width = 0;
  std::size_t order = 1;
  for (const Group& p : parts) {
    width += p.width();
    order *= p.order();
  }
  // Odometer over the factor carriers, leftmost factor slowest.
  std::vector<Elem> carrier;
  carrier.reserve(order);
  std::vector<std::size_t> idx(parts.size(), 0);
  for (;;) {
    Elem e;
    e.reserve(static_cast<std::size_t>(width));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Elem& part = parts[i].element(idx[i]);
      e.insert(e.end(), part.begin(), part.end());
    }
    carrier.push_back(std::move(e));
    std::size_t i = parts.size();
    while (i > 0) {
      --i;
      if (++idx[i] < parts[i].order()) break;
      idx[i] = 0;
      if (i == 0) goto done;
    }
  }
done:
  std::vector<Elem> gens;
  int off = 0;
  std::string desc = "prod(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Elem& g : parts[i].generators()) {
      Elem e(static_cast<std::size_t>(width), 0);
      int o = 0;
      for (std::size_t j = 0; j < parts.size(); ++j) {
        parts[j].ops()->identity(e.data() + o);
        o += parts[j].width();
      }
      std::copy(g.begin(), g.end(), e.begin() + off);
      gens.push_back(std::move(e));
    }
    desc += (i ? ", " : "") + parts[i].descriptor();
    off += parts[i].width();
  }
  desc += ")";
  return Group(std::make_shared<ProductOps>(parts), std::move(carrier),
               std::move(gens), desc);
}

inline Group direct_product(const Group& a, const Group& b) {
  return direct_product(std::vector<Group>{a, b});
}

// ---------------------------------------------------------------- heis3

// Mod-3 Heisenberg group on triples (u,v,w), i.e. upper unitriangular
// 3x3 matrices over Z/3 with u,v the off-diagonal entries and w the corner.
class Heis3Ops : public GroupOps {
 public:
  int width() const override { return 3; }
  void mul(const Scalar* a, const Scalar* b, Scalar* out) const override {
    Scalar u = static_cast<Scalar>((a[0] + b[0]) % 3);
    Scalar v = static_cast<Scalar>((a[1] + b[1]) % 3);
    Scalar w = static_cast<Scalar>((a[2] + b[2] + a[0] * b[1]) % 3);
    out[0] = u;
    out[1] = v;
    out[2] = w;
  }
  void inv(const Scalar* a, Scalar* out) const override {
    Scalar u = static_cast<Scalar>((3 - a[0]) % 3);
    Scalar v = static_cast<Scalar>((3 - a[1]) % 3);
    Scalar w = static_cast<Scalar>(((a[0] * a[1] - a[2]) % 3 + 3) % 3);
    out[0] = u;
    out[1] = v;
    out[2] = w;
  }
  void identity(Scalar* out) const override { out[0] = out[1] = out[2] = 0; }
};

inline Group heisenberg3() {
  std::vector<Elem> carrier;
  carrier.reserve(27);
  for (Scalar u = 0; u < 3; ++u)
    for (Scalar v = 0; v < 3; ++v)
      for (Scalar w = 0; w < 3; ++w) carrier.push_back({u, v, w});
  std::vector<Elem> gens{{1, 0, 0}, {0, 1, 0}};
  return Group(std::make_shared<Heis3Ops>(), std::move(carrier),
               std::move(gens), "heis3");
}

// ---------------------------------------------------------------- units

class UnitsOps : public GroupOps {
 public:
  explicit UnitsOps(int64_t n) : n_(n) {}
  int width() const override { return 1; }
  void mul(const Scalar* a, const Scalar* b, Scalar* out) const override {
    out[0] = static_cast<Scalar>((static_cast<int64_t>(a[0]) * b[0]) % n_);
  }
  void inv(const Scalar* a, Scalar* out) const override {
    out[0] = static_cast<Scalar>(Mat2::inverse_unit(a[0], n_));
  }
  void identity(Scalar* out) const override {
    out[0] = static_cast<Scalar>(1 % n_);
  }

 private:
  int64_t n_;
};

namespace detail {

// Replace the stored generating set by a deterministic irredundant one.
inline Group with_pruned_generators(Group g) {
  std::vector<Elem> all;
  all.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) all.push_back(g.element(i));
  Subgroup s = closure(g, std::move(all));
  return Group(g.ops(), g.carrier(), s.gens, g.descriptor());
}

}  // namespace detail

inline Group units_mod(int64_t n) {
  if (n < 1) throw Error("units group modulus must be >= 1");
  std::vector<Elem> carrier;
  for (int64_t u = 0; u < n; ++u)
    if (std::gcd(u, n) == 1) carrier.push_back({static_cast<Scalar>(u)});
  if (carrier.empty()) carrier.push_back({0});  // n == 1
  Group g(std::make_shared<UnitsOps>(n), std::move(carrier), {},
          "U(" + std::to_string(n) + ")");
  return detail::with_pruned_generators(std::move(g));
}

// ---------------------------------------------------------------- perms

// Permutations of {0..w-1}; (p*q)(i) = q(p(i)), apply left factor first.
class PermOps : public GroupOps {
 public:
  explicit PermOps(int w) : w_(w) {}
  int width() const override { return w_; }
  void mul(const Scalar* a, const Scalar* b, Scalar* out) const override {
    for (int i = 0; i < w_; ++i) out[i] = b[a[i]];
  }
  void inv(const Scalar* a, Scalar* out) const override {
    for (int i = 0; i < w_; ++i) out[a[i]] = static_cast<Scalar>(i);
  }
  void identity(Scalar* out) const override {
    for (int i = 0; i < w_; ++i) out[i] = static_cast<Scalar>(i);
  }

 private:
  int w_;
};

inline Group symmetric_group(int n) {
  if (n < 1) throw Error("symmetric group degree must be >= 1");
  Elem id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = static_cast<Scalar>(i);
  std::vector<Elem> carrier;
  Elem p = id;
  do {
    carrier.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<Elem> gens;
  if (n >= 2) {
    Elem swap01 = id;
    std::swap(swap01[0], swap01[1]);
    gens.push_back(swap01);
    Elem cyc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      cyc[static_cast<std::size_t>(i)] = static_cast<Scalar>((i + 1) % n);
    if (cyc != swap01) gens.push_back(std::move(cyc));
  }
  return Group(std::make_shared<PermOps>(n), std::move(carrier),
               std::move(gens), "sym(" + std::to_string(n) + ")");
}

// ---------------------------------------------------------------- semidirect

// One acting generator: an element of K together with the automorphism of N
// it should act by.
struct GeneratorAction {
  Elem k_gen;
  std::function<Elem(const Elem&)> act;
};

struct ActionSpec {
  std::vector<GeneratorAction> gens;
};

// Automorphism of a product of two cyclic groups given as a 2x2 integer
// matrix acting on column vectors, first row mod mod_u, second mod mod_v.
inline std::function<Elem(const Elem&)> linear_action(std::array<int64_t, 4> m,
                                                      int64_t mod_u,
                                                      int64_t mod_v) {
  return [m, mod_u, mod_v](const Elem& e) -> Elem {
    int64_t u = e[0], v = e[1];
    return Elem{static_cast<Scalar>(mod_norm(m[0] * u + m[1] * v, mod_u)),
                static_cast<Scalar>(mod_norm(m[2] * u + m[3] * v, mod_v))};
  };
}

// Extend images of the coordinate generators of a product of cyclic groups
// to the whole group: (c_0,..,c_r) maps to prod images[i]^{c_i}.
inline std::function<Elem(const Elem&)> abelian_images_action(
    const Group& n, std::vector<Elem> images) {
  return [n, images = std::move(images)](const Elem& e) -> Elem {
    Elem out = n.identity();
    for (std::size_t i = 0; i < e.size(); ++i)
      out = n.mul(out, n.pow(images[i], e[i]));
    return out;
  };
}

namespace detail {

struct ActionTables {
  std::vector<std::vector<int>> phi;  // K id -> permutation of N ids
  std::vector<std::string> violations;
};

inline std::vector<int> compose_perm(const std::vector<int>& p,
                                     const std::vector<int>& q) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i] = p[static_cast<std::size_t>(q[i])];
  return out;
}

// Check each generator map is an automorphism of N, then propagate along
// the Cayley graph of K and verify the induced map K -> Aut(N) is a
// well-defined homomorphism on every pair.
inline ActionTables build_action_tables(const Group& n, const Group& k,
                                        const ActionSpec& spec) {
  ActionTables t;
  auto fail = [&t](std::string msg) { t.violations.push_back(std::move(msg)); };

  std::vector<int> kgen_ids;
  std::vector<std::vector<int>> gen_perms;
  for (std::size_t gi = 0; gi < spec.gens.size(); ++gi) {
    const GeneratorAction& ga = spec.gens[gi];
    int kid = k.index_of(ga.k_gen);
    if (kid < 0) {
      fail("acting generator " + std::to_string(gi) + " is not in K");
      return t;
    }
    std::vector<int> perm(n.order(), -1);
    std::vector<char> hit(n.order(), 0);
    for (std::size_t nid = 0; nid < n.order(); ++nid) {
      Elem img = ga.act(n.element(nid));
      int iid = n.index_of(img);
      if (iid < 0) {
        fail("action of generator " + std::to_string(gi) +
             " maps " + elem_str(n.element(nid)) + " outside N");
        return t;
      }
      if (hit[iid]) {
        fail("action of generator " + std::to_string(gi) +
             " is not injective (image " + elem_str(img) + " repeats)");
        return t;
      }
      hit[iid] = 1;
      perm[nid] = iid;
    }
    for (std::size_t x = 0; x < n.order() && t.violations.empty(); ++x)
      for (std::size_t y = 0; y < n.order(); ++y) {
        int lhs = perm[static_cast<std::size_t>(
            n.index_of(n.mul(n.element(x), n.element(y))))];
        Elem rhs = n.mul(n.element(static_cast<std::size_t>(perm[x])),
                         n.element(static_cast<std::size_t>(perm[y])));
        if (lhs != n.index_of(rhs)) {
          fail("action of generator " + std::to_string(gi) +
               " is not multiplicative at (" + elem_str(n.element(x)) + ", " +
               elem_str(n.element(y)) + ")");
          break;
        }
      }
    if (!t.violations.empty()) return t;
    kgen_ids.push_back(kid);
    gen_perms.push_back(std::move(perm));
  }

  std::vector<int> id_perm(n.order());
  for (std::size_t i = 0; i < n.order(); ++i) id_perm[i] = static_cast<int>(i);
  t.phi.assign(k.order(), {});
  int keid = k.index_of(k.identity());
  t.phi[static_cast<std::size_t>(keid)] = id_perm;
  std::vector<int> todo{keid};
  while (!todo.empty()) {
    int cur = todo.back();
    todo.pop_back();
    const Elem ce = k.element(static_cast<std::size_t>(cur));
    for (std::size_t gi = 0; gi < kgen_ids.size(); ++gi) {
      int nxt = k.index_of(k.mul(ce, k.element(static_cast<std::size_t>(kgen_ids[gi]))));
      std::vector<int> val =
          compose_perm(t.phi[static_cast<std::size_t>(cur)], gen_perms[gi]);
      // phi(cur * g) = phi(cur) o phi(g): right factor acts first.
      // compose_perm(p, q) = p after q, so phi(cur) must be the outer map.
      std::vector<int>& slot = t.phi[static_cast<std::size_t>(nxt)];
      if (slot.empty()) {
        slot = std::move(val);
        todo.push_back(nxt);
      } else if (slot != val) {
        fail("action is not well-defined at K element " +
             elem_str(k.element(static_cast<std::size_t>(nxt))));
        return t;
      }
    }
  }
  for (std::size_t kid = 0; kid < k.order(); ++kid)
    if (t.phi[kid].empty()) {
      fail("acting generators do not generate K");
      return t;
    }
  for (std::size_t k1 = 0; k1 < k.order() && t.violations.empty(); ++k1)
    for (std::size_t k2 = 0; k2 < k.order(); ++k2) {
      std::size_t k12 = static_cast<std::size_t>(
          k.index_of(k.mul(k.element(k1), k.element(k2))));
      if (t.phi[k12] != compose_perm(t.phi[k1], t.phi[k2])) {
        fail("action is not a homomorphism at pair (" + elem_str(k.element(k1)) +
             ", " + elem_str(k.element(k2)) + ")");
        break;
      }
    }
  return t;
}

}  // namespace detail

// Empty list means the action is valid.
inline std::vector<std::string> validate_action(const Group& n, const Group& k,
                                                const ActionSpec& spec) {
  return detail::build_action_tables(n, k, spec).violations;
}

class SemidirectOps : public GroupOps {
 public:
  SemidirectOps(Group n, Group k, std::vector<std::vector<int>> phi)
      : n_(std::move(n)), k_(std::move(k)), phi_(std::move(phi)) {}

  int width() const override { return n_.width() + k_.width(); }

  void mul(const Scalar* a, const Scalar* b, Scalar* out) const override {
    int nw = n_.width();
    Elem na(a, a + nw), ka(a + nw, a + width());
    Elem nb(b, b + nw), kb(b + nw, b + width());
    const std::vector<int>& p = phi_[static_cast<std::size_t>(k_.index_of(ka))];
    Elem nb_t = n_.element(static_cast<std::size_t>(
        p[static_cast<std::size_t>(n_.index_of(nb))]));
    Elem nout = n_.mul(na, nb_t);
    Elem kout = k_.mul(ka, kb);
    std::copy(nout.begin(), nout.end(), out);
    std::copy(kout.begin(), kout.end(), out + nw);
  }

  void inv(const Scalar* a, Scalar* out) const override {
    int nw = n_.width();
    Elem na(a, a + nw), ka(a + nw, a + width());
    Elem kinv = k_.inv(ka);
    const std::vector<int>& p =
        phi_[static_cast<std::size_t>(k_.index_of(kinv))];
    Elem ninv = n_.inv(na);
    Elem nout = n_.element(static_cast<std::size_t>(
        p[static_cast<std::size_t>(n_.index_of(ninv))]));
    std::copy(nout.begin(), nout.end(), out);
    std::copy(kinv.begin(), kinv.end(), out + nw);
  }

  void identity(Scalar* out) const override {
    n_.ops()->identity(out);
    k_.ops()->identity(out + n_.width());
  }

  const Group& n_part() const { return n_; }
  const Group& k_part() const { return k_; }

 private:
  Group n_;
  Group k_;
  std::vector<std::vector<int>> phi_;
};

inline Group semidirect(const Group& n, const Group& k, const ActionSpec& spec,
                        const std::string& descriptor = "") {
  detail::ActionTables t = detail::build_action_tables(n, k, spec);
  if (!t.violations.empty()) {
    std::string msg = "invalid semidirect action:";
    for (const std::string& v : t.violations) msg += " " + v + ";";
    throw InvalidActionError(msg);
  }
  std::vector<Elem> carrier;
  carrier.reserve(n.order() * k.order());
  for (std::size_t ni = 0; ni < n.order(); ++ni)
    for (std::size_t ki = 0; ki < k.order(); ++ki) {
      Elem e = n.element(ni);
      const Elem& kp = k.element(ki);
      e.insert(e.end(), kp.begin(), kp.end());
      carrier.push_back(std::move(e));
    }
  std::vector<Elem> gens;
  for (const Elem& g : n.generators()) {
    Elem e = g;
    Elem ke = k.identity();
    e.insert(e.end(), ke.begin(), ke.end());
    gens.push_back(std::move(e));
  }
  for (const Elem& g : k.generators()) {
    Elem e = n.identity();
    e.insert(e.end(), g.begin(), g.end());
    gens.push_back(std::move(e));
  }
  std::string desc = descriptor.empty()
                         ? "sd(" + n.descriptor() + ", " + k.descriptor() + ")"
                         : descriptor;
  return Group(std::make_shared<SemidirectOps>(n, k, std::move(t.phi)),
               std::move(carrier), std::move(gens), desc);
}

// The N-part {(n, e)} as a subgroup of a semidirect product.
inline Subgroup semidirect_n_part(const Group& g) {
  auto ops = std::dynamic_pointer_cast<const SemidirectOps>(g.ops());
  if (!ops) throw Error("group is not a semidirect product");
  const Group& n = ops->n_part();
  const Group& k = ops->k_part();
  std::vector<Elem> elems;
  elems.reserve(n.order());
  for (std::size_t ni = 0; ni < n.order(); ++ni) {
    Elem e = n.element(ni);
    Elem ke = k.identity();
    e.insert(e.end(), ke.begin(), ke.end());
    elems.push_back(std::move(e));
  }
  return closure(g, std::move(elems));
}

// ---------------------------------------------------------------- named groups

// Z/n acted on by its full unit group.
inline Group holomorph_cyclic(int64_t n) {
  if (n < 2) throw Error("holomorph_cyclic needs n >= 2");
  Group zn = cyclic(n);
  Group un = units_mod(n);
  ActionSpec spec;
  for (const Elem& u : un.generators()) {
    int64_t uv = u[0];
    spec.gens.push_back(GeneratorAction{
        u, [uv, n](const Elem& e) -> Elem {
          return {static_cast<Scalar>((uv * e[0]) % n)};
        }});
  }
  return semidirect(zn, un, spec, "hol(" + std::to_string(n) + ")");
}

// Z/n with the inversion action of Z/2.
inline Group dihedral(int64_t n) {
  Group zn = cyclic(n);
  Group z2 = cyclic(2);
  ActionSpec spec;
  spec.gens.push_back(GeneratorAction{{1}, [n](const Elem& e) -> Elem {
                                        return {static_cast<Scalar>((n - e[0]) % n)};
                                      }});
  return semidirect(zn, z2, spec, "dih(" + std::to_string(n) + ")");
}

// (Z/9 x Z/9) acted on by heis3 x Z/2 through the matrices X, Y, T.
inline Group build_W() {
  Group n = direct_product(cyclic(9), cyclic(9));
  Group k = direct_product(heisenberg3(), cyclic(2));
  ActionSpec spec;
  Elem x{1, 0, 0, 0}, y{0, 1, 0, 0}, t{0, 0, 0, 1};
  spec.gens.push_back(GeneratorAction{x, linear_action({1, -1, 3, -2}, 9, 9)});
  spec.gens.push_back(GeneratorAction{y, linear_action({-2, 0, 0, 4}, 9, 9)});
  spec.gens.push_back(GeneratorAction{t, linear_action({-1, 0, 0, -1}, 9, 9)});
  return semidirect(n, k, spec, "W4374");
}

// ---------------------------------------------------------------- 1458 search

enum class SearchMode {
  Full,       // all generator-image triples in Aut(Z/3 x Z/9)
  Descended,  // only the action induced by W's matrices on the quotient
};

namespace detail {

// All automorphisms of Z/3 x Z/9 as permutations of carrier ids, in
// lexicographic order of (image of (1,0), image of (0,1)).
inline std::vector<std::vector<int>> automorphisms_z3z9(const Group& n) {
  std::vector<std::vector<int>> out;
  for (std::size_t i1 = 0; i1 < n.order(); ++i1) {
    const Elem im1 = n.element(i1);
    if (order_of(n, im1) > 3) continue;  // image of the order-3 generator
    for (std::size_t i2 = 0; i2 < n.order(); ++i2) {
      const Elem im2 = n.element(i2);
      std::vector<int> perm(n.order());
      std::vector<char> hit(n.order(), 0);
      bool bij = true;
      for (std::size_t x = 0; x < n.order() && bij; ++x) {
        const Elem& e = n.element(x);
        Elem img = n.mul(n.pow(im1, e[0]), n.pow(im2, e[1]));
        int iid = n.index_of(img);
        if (hit[static_cast<std::size_t>(iid)]) bij = false;
        hit[static_cast<std::size_t>(iid)] = 1;
        perm[x] = iid;
      }
      if (bij) out.push_back(std::move(perm));
    }
  }
  return out;
}

inline std::vector<int> inv_perm(const std::vector<int>& p) {
  std::vector<int> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    out[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return out;
}

inline bool perm_is_identity(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Do the three prospective images satisfy the defining relations of
// heis3 x Z/2 on (x, y, t)?
inline bool triple_satisfies_relations(const std::vector<int>& ax,
                                       const std::vector<int>& ay,
                                       const std::vector<int>& at) {
  auto comm = [](const std::vector<int>& p, const std::vector<int>& q) {
    return compose_perm(compose_perm(compose_perm(inv_perm(p), inv_perm(q)), p),
                        q);
  };
  if (!perm_is_identity(compose_perm(ax, compose_perm(ax, ax)))) return false;
  if (!perm_is_identity(compose_perm(ay, compose_perm(ay, ay)))) return false;
  if (!perm_is_identity(compose_perm(at, at))) return false;
  if (compose_perm(ax, at) != compose_perm(at, ax)) return false;
  if (compose_perm(ay, at) != compose_perm(at, ay)) return false;
  std::vector<int> z = comm(ax, ay);
  if (compose_perm(ax, z) != compose_perm(z, ax)) return false;
  if (compose_perm(ay, z) != compose_perm(z, ay)) return false;
  return true;
}

inline GeneratorAction perm_action(const Group& n, Elem k_gen,
                                   std::vector<int> perm) {
  return GeneratorAction{
      std::move(k_gen), [n, perm = std::move(perm)](const Elem& e) -> Elem {
        return n.element(
            static_cast<std::size_t>(perm[static_cast<std::size_t>(n.index_of(e))]));
      }};
}

inline bool counterexample_criteria(const Group& g) {
  std::vector<Subgroup> ds = derived_series(g);
  if (ds.back().order() != 1 || ds.size() != 4) return false;  // length 3
  for (int64_t m : {2, 3}) {
    Group p = power_subgroup(g, m).as_group();
    std::vector<Subgroup> pds = derived_series(p);
    if (pds.back().order() != 1 || pds.size() > 3) return false;  // length <= 2
  }
  return true;
}

}  // namespace detail

// Search for an order-1458 group (Z/3 x Z/9) x| (heis3 x Z/2) whose derived
// length is 3 while both coprime power subgroups are metabelian.  Candidate
// actions are generator-image triples in lexicographic order; the first hit
// wins regardless of thread schedule.
inline std::optional<Group> search_counterexample_1458(
    SearchMode mode = SearchMode::Full, unsigned threads = 1) {
  Group n = direct_product(cyclic(3), cyclic(9));
  Group k = direct_product(heisenberg3(), cyclic(2));
  Elem x{1, 0, 0, 0}, y{0, 1, 0, 0}, t{0, 0, 0, 1};

  auto make_group = [&](const std::vector<int>& ax, const std::vector<int>& ay,
                        const std::vector<int>& at) -> std::optional<Group> {
    ActionSpec spec;
    spec.gens.push_back(detail::perm_action(n, x, ax));
    spec.gens.push_back(detail::perm_action(n, y, ay));
    spec.gens.push_back(detail::perm_action(n, t, at));
    try {
      return semidirect(n, k, spec);
    } catch (const InvalidActionError&) {
      return std::nullopt;
    }
  };

  if (mode == SearchMode::Descended) {
    // W's matrices descend to (Z/9 x Z/9)/<(3,0)> ~ Z/3 x Z/9: first row is
    // read mod 3, second mod 9 (well-defined since the lower-left entries
    // are divisible by 3).
    auto as_perm = [&](std::array<int64_t, 4> m) {
      auto f = linear_action(m, 3, 9);
      std::vector<int> perm(n.order());
      for (std::size_t i = 0; i < n.order(); ++i)
        perm[i] = n.index_of(f(n.element(i)));
      return perm;
    };
    std::vector<int> ax = as_perm({1, -1, 3, -2});
    std::vector<int> ay = as_perm({-2, 0, 0, 4});
    std::vector<int> at = as_perm({-1, 0, 0, -1});
    if (!detail::triple_satisfies_relations(ax, ay, at)) return std::nullopt;
    std::optional<Group> g = make_group(ax, ay, at);
    if (g && detail::counterexample_criteria(*g)) return g;
    return std::nullopt;
  }

  std::vector<std::vector<int>> auts = detail::automorphisms_z3z9(n);
  std::vector<std::size_t> ord3, ord2;
  for (std::size_t i = 0; i < auts.size(); ++i) {
    if (detail::perm_is_identity(
            detail::compose_perm(auts[i], detail::compose_perm(auts[i], auts[i]))))
      ord3.push_back(i);
    if (detail::perm_is_identity(detail::compose_perm(auts[i], auts[i])))
      ord2.push_back(i);
  }

  std::vector<std::array<std::size_t, 3>> candidates;
  for (std::size_t ix : ord3)
    for (std::size_t iy : ord3)
      for (std::size_t it : ord2)
        if (detail::triple_satisfies_relations(auts[ix], auts[iy], auts[it]))
          candidates.push_back({ix, iy, it});

  std::atomic<std::size_t> best{candidates.size()};
  unsigned nthreads = std::max(1u, threads);
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= candidates.size() || i >= best.load()) return;
      const auto& c = candidates[i];
      std::optional<Group> g = make_group(auts[c[0]], auts[c[1]], auts[c[2]]);
      if (g && detail::counterexample_criteria(*g)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  std::size_t hit = best.load();
  if (hit >= candidates.size()) return std::nullopt;
  const auto& c = candidates[hit];
  return make_group(auts[c[0]], auts[c[1]], auts[c[2]]);
}

}  // namespace grouplaw
