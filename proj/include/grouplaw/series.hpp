#pragma once

#include <numeric>
#include <vector>

#include "grouplaw/subgroups.hpp"

namespace grouplaw {

// G = G^(0) >= G^(1) >= ... until the terms stabilize.  The last entry is
// either trivial (solvable case) or the first repeated term.
inline std::vector<Subgroup> derived_series(const Group& g_handle) {
  std::vector<Subgroup> series{whole_subgroup(g_handle)};
  for (;;) {
    const Subgroup& cur = series.back();
    if (cur.order() == 1) break;
    Subgroup next = commutator_subgroup(g_handle, cur, cur);
    if (next.same_as(cur)) break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_solvable(const Group& g_handle) {
  return derived_series(g_handle).back().order() == 1;
}

// Least d with G^(d) trivial.
inline int derived_length(const Group& g_handle) {
  std::vector<Subgroup> series = derived_series(g_handle);
  if (series.back().order() != 1)
    throw NotSolvableError("derived series of " + g_handle.descriptor() +
                           " stabilizes at order " +
                           std::to_string(series.back().order()));
  return static_cast<int>(series.size()) - 1;
}

// gamma_1 = G, gamma_{k+1} = [gamma_k, G], until the terms stabilize.
inline std::vector<Subgroup> lower_central_series(const Group& g_handle) {
  Subgroup whole = whole_subgroup(g_handle);
  std::vector<Subgroup> series{whole};
  for (;;) {
    const Subgroup& cur = series.back();
    if (cur.order() == 1) break;
    Subgroup next = commutator_subgroup(g_handle, cur, whole);
    if (next.same_as(cur)) break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_nilpotent(const Group& g_handle) {
  return lower_central_series(g_handle).back().order() == 1;
}

// Least c with gamma_{c+1} trivial.
inline int nilpotency_class(const Group& g_handle) {
  std::vector<Subgroup> series = lower_central_series(g_handle);
  if (series.back().order() != 1)
    throw NotNilpotentError("lower central series of " + g_handle.descriptor() +
                            " stabilizes at order " +
                            std::to_string(series.back().order()));
  return static_cast<int>(series.size()) - 1;
}

// lcm of element orders.
inline int64_t exponent(const Group& g_handle) {
  int64_t acc = 1;
  for (std::size_t id = 0; id < g_handle.order(); ++id)
    acc = std::lcm(acc, order_of(g_handle, g_handle.element(id)));
  return acc;
}

// Elements commuting with every member of elems; this set is a subgroup.
inline Subgroup centralizer(const Group& g_handle,
                            const std::vector<Elem>& elems) {
  std::vector<Elem> members;
  for (std::size_t id = 0; id < g_handle.order(); ++id) {
    const Elem g = g_handle.element(id);
    bool commutes = true;
    for (const Elem& s : elems)
      if (g_handle.mul(g, s) != g_handle.mul(s, g)) {
        commutes = false;
        break;
      }
    if (commutes) members.push_back(g);
  }
  return closure(g_handle, std::move(members));
}

inline Subgroup center(const Group& g_handle) {
  std::vector<Elem> all;
  all.reserve(g_handle.order());
  for (std::size_t id = 0; id < g_handle.order(); ++id)
    all.push_back(g_handle.element(id));
  return centralizer(g_handle, all);
}

}  // namespace grouplaw
