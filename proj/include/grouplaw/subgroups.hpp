#pragma once

#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "grouplaw/group.hpp"

namespace grouplaw {

// Subgroup of a concrete ambient group: sorted carrier ids plus the
// generating set the construction actually used.
struct Subgroup {
  Group ambient;
  std::vector<int> members;  // sorted ids into ambient carrier
  std::vector<Elem> gens;

  std::size_t order() const { return members.size(); }

  bool contains_id(int id) const {
    return std::binary_search(members.begin(), members.end(), id);
  }

  bool contains(const Elem& g) const {
    int id = ambient.index_of(g);
    return id >= 0 && contains_id(id);
  }

  bool subset_of(const Subgroup& other) const {
    return std::includes(other.members.begin(), other.members.end(),
                         members.begin(), members.end());
  }

  bool same_as(const Subgroup& other) const { return members == other.members; }

  // Standalone handle sharing the ambient multiplication oracle.
  Group as_group() const {
    std::vector<Elem> carrier;
    carrier.reserve(members.size());
    for (int id : members) carrier.push_back(ambient.element(id));
    return Group(ambient.ops(), std::move(carrier), gens,
                 "subgroup(order=" + std::to_string(members.size()) + ") of " +
                     ambient.descriptor());
  }
};

namespace detail {

// Membership bitmap for a BFS closure under right multiplication by gens.
inline void close_under(const Group& g_handle, const std::vector<Elem>& gens,
                        std::vector<char>& in) {
  std::deque<int> todo;
  for (std::size_t id = 0; id < in.size(); ++id)
    if (in[id]) todo.push_back(static_cast<int>(id));
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop_front();
    const Elem& t = g_handle.element(static_cast<std::size_t>(id));
    for (const Elem& g : gens) {
      Elem u = g_handle.mul(t, g);
      int uid = g_handle.index_of(u);
      if (uid < 0) throw Error("closure left the ambient carrier");
      if (!in[uid]) {
        in[uid] = 1;
        todo.push_back(uid);
      }
    }
  }
}

inline Subgroup subgroup_from_bitmap(const Group& g_handle,
                                     std::vector<char> in,
                                     std::vector<Elem> gens) {
  std::vector<int> members;
  for (std::size_t id = 0; id < in.size(); ++id)
    if (in[id]) members.push_back(static_cast<int>(id));
  return Subgroup{g_handle, std::move(members), std::move(gens)};
}

}  // namespace detail

// Subgroup generated by seed.  Seeds are consumed in sorted encoding order
// and redundant ones dropped, so the stored generating set is deterministic.
inline Subgroup closure(const Group& g_handle, std::vector<Elem> seed) {
  std::vector<char> in(g_handle.order(), 0);
  int eid = g_handle.index_of(g_handle.identity());
  in[eid] = 1;
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::vector<Elem> gens;
  for (const Elem& s : seed) {
    int sid = g_handle.index_of(s);
    if (sid < 0) throw Error("seed element not in carrier");
    if (in[sid]) continue;
    gens.push_back(s);
    in[sid] = 1;
    detail::close_under(g_handle, gens, in);
  }
  return detail::subgroup_from_bitmap(g_handle, std::move(in), std::move(gens));
}

inline Subgroup whole_subgroup(const Group& g_handle) {
  std::vector<int> members(g_handle.order());
  std::iota(members.begin(), members.end(), 0);
  return Subgroup{g_handle, std::move(members), g_handle.generators()};
}

inline Subgroup trivial_subgroup(const Group& g_handle) {
  return Subgroup{g_handle, {g_handle.index_of(g_handle.identity())}, {}};
}

// G^{*m}: subgroup generated by all m-th powers of members.
inline Subgroup power_subgroup(const Group& g_handle, const Subgroup& h,
                               int64_t m) {
  if (m < 1) throw Error("power subgroup exponent must be >= 1");
  std::vector<Elem> seed;
  seed.reserve(h.members.size());
  for (int id : h.members)
    seed.push_back(g_handle.pow(g_handle.element(id), m));
  return closure(g_handle, std::move(seed));
}

inline Subgroup power_subgroup(const Group& g_handle, int64_t m) {
  return power_subgroup(g_handle, whole_subgroup(g_handle), m);
}

namespace detail {

// Grow ⟨gens⟩ until closed under conjugation by each element of conj_by.
inline Subgroup conjugation_closure(const Group& g_handle,
                                    std::vector<Elem> gens,
                                    const std::vector<Elem>& conj_by) {
  Subgroup h = closure(g_handle, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int id : h.members) {
      const Elem t = g_handle.element(static_cast<std::size_t>(id));
      for (const Elem& c : conj_by) {
        Elem u = g_handle.conj(t, c);
        if (!h.contains(u)) {
          std::vector<Elem> next = h.gens;
          next.push_back(u);
          h = closure(g_handle, std::move(next));
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return h;
}

}  // namespace detail

// [A,B]: the subgroup generated by all commutators [a,b], a in A, b in B.
// Computed from generator commutators closed under conjugation by the
// generators of ⟨A ∪ B⟩, which yields the same subgroup.
inline Subgroup commutator_subgroup(const Group& g_handle, const Subgroup& a,
                                    const Subgroup& b) {
  std::vector<Elem> seed;
  for (const Elem& x : a.gens)
    for (const Elem& y : b.gens) seed.push_back(g_handle.comm(x, y));
  std::vector<Elem> conj_by = a.gens;
  conj_by.insert(conj_by.end(), b.gens.begin(), b.gens.end());
  return detail::conjugation_closure(g_handle, std::move(seed), conj_by);
}

inline Subgroup derived_subgroup(const Group& g_handle) {
  Subgroup whole = whole_subgroup(g_handle);
  return commutator_subgroup(g_handle, whole, whole);
}

inline bool is_normal(const Group& g_handle, const Subgroup& h) {
  for (int id : h.members) {
    const Elem t = g_handle.element(static_cast<std::size_t>(id));
    for (const Elem& g : g_handle.generators())
      if (!h.contains(g_handle.conj(t, g))) return false;
  }
  return true;
}

inline Subgroup normal_closure(const Group& g_handle,
                               const std::vector<Elem>& seed) {
  return detail::conjugation_closure(g_handle, seed, g_handle.generators());
}

// Coset group of a normal subgroup.  Elements are encoded by the
// lexicographically least member of each coset.
class QuotientOps : public GroupOps {
 public:
  QuotientOps(Group base, std::shared_ptr<const std::vector<int>> rep_of)
      : base_(std::move(base)), rep_of_(std::move(rep_of)) {
    Elem e = base_.identity();
    id_rep_ = base_.element(
        static_cast<std::size_t>((*rep_of_)[base_.index_of(e)]));
  }

  int width() const override { return base_.width(); }

  void mul(const Scalar* a, const Scalar* b, Scalar* out) const override {
    Elem ea(a, a + width()), eb(b, b + width());
    project(base_.mul(ea, eb), out);
  }

  void inv(const Scalar* a, Scalar* out) const override {
    Elem ea(a, a + width());
    project(base_.inv(ea), out);
  }

  void identity(Scalar* out) const override {
    std::copy(id_rep_.begin(), id_rep_.end(), out);
  }

  const Group& base() const { return base_; }

  Elem rep(const Elem& g) const {
    Elem out(width());
    project(g, out.data());
    return out;
  }

 private:
  void project(const Elem& g, Scalar* out) const {
    int id = base_.index_of(g);
    if (id < 0) throw Error("element not in quotient base carrier");
    const Elem& r = base_.element(static_cast<std::size_t>((*rep_of_)[id]));
    std::copy(r.begin(), r.end(), out);
  }

  Group base_;
  std::shared_ptr<const std::vector<int>> rep_of_;
  Elem id_rep_;
};

struct QuotientMap {
  Group base;
  Group quot;
  std::shared_ptr<const std::vector<int>> rep_of;

  // Projection G -> G/N.
  Elem operator()(const Elem& g) const {
    int id = base.index_of(g);
    if (id < 0) throw Error("element not in quotient base carrier");
    return base.element(static_cast<std::size_t>((*rep_of)[id]));
  }
};

inline QuotientMap quotient(const Group& g_handle, const Subgroup& n) {
  if (!is_normal(g_handle, n))
    throw NotNormalError("quotient by a non-normal subgroup of " +
                         g_handle.descriptor());
  auto rep_of = std::make_shared<std::vector<int>>(g_handle.order(), -1);
  // Scanning ids in increasing order makes the first unassigned member of
  // each coset its lexicographically least one.
  for (std::size_t id = 0; id < g_handle.order(); ++id) {
    if ((*rep_of)[id] >= 0) continue;
    const Elem g = g_handle.element(id);
    for (int nid : n.members) {
      Elem gm = g_handle.mul(g, g_handle.element(static_cast<std::size_t>(nid)));
      (*rep_of)[static_cast<std::size_t>(g_handle.index_of(gm))] =
          static_cast<int>(id);
    }
  }
  std::vector<Elem> carrier;
  for (std::size_t id = 0; id < g_handle.order(); ++id)
    if ((*rep_of)[id] == static_cast<int>(id)) carrier.push_back(g_handle.element(id));
  auto ops = std::make_shared<QuotientOps>(g_handle, rep_of);
  std::vector<Elem> gens;
  for (const Elem& g : g_handle.generators()) {
    Elem r = ops->rep(g);
    if (std::find(gens.begin(), gens.end(), r) == gens.end() &&
        r != ops->rep(g_handle.identity()))
      gens.push_back(r);
  }
  Group quot(ops, std::move(carrier), std::move(gens),
             g_handle.descriptor() + "/(order " + std::to_string(n.order()) +
                 " normal subgroup)");
  return QuotientMap{g_handle, quot, rep_of};
}

}  // namespace grouplaw
