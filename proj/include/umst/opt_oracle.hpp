#pragma once

// Brute-force computation of OPT: the smallest set of non-trivial areas
// whose reveal (to the hidden truth) makes some spanning tree verifiable.
// Subsets are enumerated by ascending cardinality with early exit; OPT is
// small on every instance family this is pointed at.

#include <optional>
#include <vector>

#include "umst/u_red.hpp"

namespace umst {

struct OracleLimits {
  int max_nontrivial = 20;
};

namespace detail {

// Exhaustive tree search keeps the oracle exact where cross-checks run;
// the Kruskal-order pass takes over beyond desk-size vertex counts.
inline bool verifiable(const UncertainGraph& g, const std::vector<Area>& areas) {
  if (g.vertex_count() <= 6) return find_verifiable_tree_exhaustive(g, areas).has_value();
  return find_verifiable_tree(g, areas).has_value();
}

inline std::vector<EdgeIndex> nontrivial_edges(const std::vector<Area>& areas) {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < static_cast<int>(areas.size()); ++e)
    if (!areas[e].is_trivial()) out.push_back(e);
  return out;
}

inline void check_bound(const std::vector<EdgeIndex>& nontrivial, const OracleLimits& limits) {
  if (static_cast<int>(nontrivial.size()) > limits.max_nontrivial)
    throw Error(ErrorCode::InstanceTooLarge,
                std::to_string(nontrivial.size()) + " non-trivial edges exceed the oracle bound " +
                    std::to_string(limits.max_nontrivial));
}

// Calls fn(subset) for every subset of `universe` of size k, in
// lexicographic order; fn returns true to stop.
inline bool for_each_subset_of_size(const std::vector<EdgeIndex>& universe, int k,
                                    const std::function<bool(const std::vector<EdgeIndex>&)>& fn) {
  int n = static_cast<int>(universe.size());
  std::vector<EdgeIndex> pick;
  auto rec = [&](auto&& self, int next) -> bool {
    if (static_cast<int>(pick.size()) == k) return fn(pick);
    for (int i = next; i + (k - static_cast<int>(pick.size())) <= n; ++i) {
      pick.push_back(universe[i]);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

inline std::vector<Area> narrow_to_truth(const Instance& inst, const std::vector<Area>& base,
                                         const std::vector<EdgeIndex>& subset) {
  std::vector<Area> areas = base;
  for (EdgeIndex e : subset) areas[e] = Area::trivial(inst.truth[e]);
  return areas;
}

}  // namespace detail

// Smallest number of updates that verifies some MST, starting from the
// given view of the areas (defaults to the un-updated instance).
inline int opt_updates(const Instance& inst, const std::vector<Area>& view_areas,
                       const OracleLimits& limits = {}) {
  auto nontrivial = detail::nontrivial_edges(view_areas);
  detail::check_bound(nontrivial, limits);
  for (int k = 0; k <= static_cast<int>(nontrivial.size()); ++k) {
    bool found = detail::for_each_subset_of_size(
        nontrivial, k, [&](const std::vector<EdgeIndex>& subset) {
          return detail::verifiable(inst.graph, detail::narrow_to_truth(inst, view_areas, subset));
        });
    if (found) return k;
  }
  throw std::logic_error("revealing every non-trivial area must verify");  // unreachable
}

inline int opt_updates(const Instance& inst, const OracleLimits& limits = {}) {
  return opt_updates(inst, make_view(inst.graph).areas, limits);
}

// All inclusion-minimal verifying update sets of the given view.
inline std::vector<std::vector<EdgeIndex>> minimal_verifying_sets(
    const Instance& inst, const std::vector<Area>& view_areas, const OracleLimits& limits = {}) {
  auto nontrivial = detail::nontrivial_edges(view_areas);
  detail::check_bound(nontrivial, limits);
  std::vector<std::vector<EdgeIndex>> minimal;
  auto contains_found = [&](const std::vector<EdgeIndex>& s) {
    for (const auto& m : minimal)
      if (std::includes(s.begin(), s.end(), m.begin(), m.end())) return true;
    return false;
  };
  for (int k = 0; k <= static_cast<int>(nontrivial.size()); ++k) {
    detail::for_each_subset_of_size(nontrivial, k, [&](const std::vector<EdgeIndex>& subset) {
      // verifying supersets of a recorded minimal set are not minimal
      if (contains_found(subset)) return false;
      if (detail::verifiable(inst.graph, detail::narrow_to_truth(inst, view_areas, subset)))
        minimal.push_back(subset);
      return false;
    });
  }
  return minimal;
}

inline std::vector<std::vector<EdgeIndex>> minimal_verifying_sets(const Instance& inst,
                                                                  const OracleLimits& limits = {}) {
  return minimal_verifying_sets(inst, make_view(inst.graph).areas, limits);
}

// W is a witness set of the view iff no verifying update set avoids W,
// i.e. every minimal verifying set meets W. A view that is already
// verifiable has no witness sets at all.
inline bool is_witness_set(const Instance& inst, const std::vector<Area>& view_areas,
                           const std::vector<EdgeIndex>& w, const OracleLimits& limits = {}) {
  auto sets = minimal_verifying_sets(inst, view_areas, limits);
  for (const auto& s : sets) {
    bool meets = false;
    for (EdgeIndex e : s)
      if (std::find(w.begin(), w.end(), e) != w.end()) {
        meets = true;
        break;
      }
    if (!meets) return false;
  }
  return true;
}

}  // namespace umst
