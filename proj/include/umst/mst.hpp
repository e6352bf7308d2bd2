#pragma once

// Spanning trees, Kruskal on exact weights, and the verification
// predicate: T is an MST of every realization iff for every non-tree
// edge f and every edge p on the tree path between f's endpoints,
// U_p <= L_f.

#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "umst/graph.hpp"

namespace umst {

struct SpanningTree {
  std::vector<EdgeIndex> edges;  // ascending

  bool contains(EdgeIndex e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }
};

inline SpanningTree make_tree(std::vector<EdgeIndex> edges) {
  std::sort(edges.begin(), edges.end());
  return SpanningTree{std::move(edges)};
}

inline bool is_spanning_tree(const UncertainGraph& g, const std::vector<EdgeIndex>& edges) {
  if (static_cast<int>(edges.size()) != g.vertex_count() - 1) return false;
  detail::UnionFind uf(g.vertex_count());
  for (EdgeIndex e : edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    if (!uf.unite(g.edges[e].u, g.edges[e].v)) return false;  // cycle
  }
  return true;  // n-1 acyclic edges span
}

// Kruskal's algorithm; ties broken by ascending edge index.
inline SpanningTree kruskal(const Realization& r) {
  const UncertainGraph& g = *r.graph;
  std::vector<EdgeIndex> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
    if (r.weights[a] != r.weights[b]) return r.weights[a] < r.weights[b];
    return a < b;
  });
  detail::UnionFind uf(g.vertex_count());
  std::vector<EdgeIndex> chosen;
  for (EdgeIndex e : order)
    if (uf.unite(g.edges[e].u, g.edges[e].v)) chosen.push_back(e);
  if (static_cast<int>(chosen.size()) != g.vertex_count() - 1)
    throw Error(ErrorCode::NoSpanningTree, "graph is disconnected");
  return make_tree(std::move(chosen));
}

inline Weight tree_weight(const Realization& r, const SpanningTree& t) {
  Weight total{0};
  for (EdgeIndex e : t.edges) total += r.weights[e];
  return total;
}

// Edge sequence of the unique path between u and v inside the tree.
inline std::vector<EdgeIndex> tree_path(const UncertainGraph& g, const SpanningTree& t,
                                        VertexIndex from, VertexIndex to) {
  std::vector<std::vector<std::pair<VertexIndex, EdgeIndex>>> adj(g.vertex_count());
  for (EdgeIndex e : t.edges) {
    adj[g.edges[e].u].push_back({g.edges[e].v, e});
    adj[g.edges[e].v].push_back({g.edges[e].u, e});
  }
  std::vector<EdgeIndex> via(g.vertex_count(), -1);
  std::vector<VertexIndex> prev(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<VertexIndex> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    VertexIndex x = q.front();
    q.pop();
    if (x == to) break;
    for (auto [y, e] : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        via[y] = e;
        prev[y] = x;
        q.push(y);
      }
  }
  if (!seen[to]) throw Error(ErrorCode::InvalidTree, "tree does not connect the query vertices");
  std::vector<EdgeIndex> path;
  for (VertexIndex x = to; x != from; x = prev[x]) path.push_back(via[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

// L_e >= U_c for every other cycle edge c; such an edge is at least as
// heavy as the rest of the cycle in every realization.
inline bool always_maximal(const std::vector<Area>& areas, const std::vector<EdgeIndex>& cycle,
                           EdgeIndex e, const WeightOrder& ord) {
  for (EdgeIndex c : cycle) {
    if (c == e) continue;
    if (!ord.ge(areas[e].inf(), areas[c].sup())) return false;
  }
  return true;
}

// True iff t is an MST of every realization of (g, areas).
inline bool is_verified_mst(const UncertainGraph& g, const std::vector<Area>& areas,
                            const SpanningTree& t) {
  if (!is_spanning_tree(g, t.edges))
    throw Error(ErrorCode::InvalidTree, "edge set is not a spanning tree");
  WeightOrder ord = g.order();
  for (EdgeIndex f = 0; f < g.edge_count(); ++f) {
    if (t.contains(f)) continue;
    for (EdgeIndex p : tree_path(g, t, g.edges[f].u, g.edges[f].v))
      if (!ord.le(areas[p].sup(), areas[f].inf())) return false;
  }
  return true;
}

inline bool is_verified_mst(const UncertainGraph& g, const SpanningTree& t) {
  return is_verified_mst(g, make_view(g).areas, t);
}

// All spanning trees, in lexicographic order of their edge index sets.
// Exhaustive; intended for graphs of desk size.
inline std::vector<SpanningTree> enumerate_spanning_trees(const UncertainGraph& g) {
  std::vector<SpanningTree> out;
  int m = g.edge_count();
  int need = g.vertex_count() - 1;
  if (need == 0) {
    out.push_back(SpanningTree{});
    return out;
  }
  if (need < 0 || need > m) return out;
  std::vector<EdgeIndex> pick;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == need) {
      if (is_spanning_tree(g, pick)) out.push_back(SpanningTree{pick});
      return;
    }
    int remaining = need - static_cast<int>(pick.size());
    for (int e = next; e + remaining <= m; ++e) {
      pick.push_back(e);
      self(self, e + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Oracle-grade search for a verifiable tree: try every spanning tree.
inline std::optional<SpanningTree> find_verifiable_tree_exhaustive(
    const UncertainGraph& g, const std::vector<Area>& areas) {
  for (const auto& t : enumerate_spanning_trees(g))
    if (is_verified_mst(g, areas, t)) return t;
  return std::nullopt;
}

inline std::optional<SpanningTree> find_verifiable_tree_exhaustive(const UncertainGraph& g) {
  return find_verifiable_tree_exhaustive(g, make_view(g).areas);
}

struct Counterexample {
  Realization realization;
  EdgeIndex non_tree_edge;  // f
  EdgeIndex path_edge;      // p with U_p > L_f
};

// For an unverified tree, builds a realization in which t is not minimum.
// Witness weights are nudged inward from the violating limits by
// min(width/4, gap/3), which keeps membership in open areas and keeps
// w_p > w_f strict.
inline std::optional<Counterexample> verification_counterexample(const UncertainGraph& g,
                                                                 const std::vector<Area>& areas,
                                                                 const SpanningTree& t) {
  if (!is_spanning_tree(g, t.edges))
    throw Error(ErrorCode::InvalidTree, "edge set is not a spanning tree");
  WeightOrder ord = g.order();
  for (EdgeIndex f = 0; f < g.edge_count(); ++f) {
    if (t.contains(f)) continue;
    for (EdgeIndex p : tree_path(g, t, g.edges[f].u, g.edges[f].v)) {
      if (ord.le(areas[p].sup(), areas[f].inf())) continue;
      Weight gap = areas[p].sup() - areas[f].inf();
      auto inward = [&](const Area& a, bool from_top) {
        Weight width = a.sup() - a.inf();
        Weight step = std::min(width / 4, gap / 3);
        if (from_top) return a.hi_open ? a.sup() - step : a.sup();
        return a.lo_open ? a.inf() + step : a.inf();
      };
      std::vector<Weight> w(g.edge_count());
      for (EdgeIndex e = 0; e < g.edge_count(); ++e)
        w[e] = areas[e].is_trivial() ? areas[e].inf() : (areas[e].inf() + areas[e].sup()) / 2;
      w[p] = inward(areas[p], true);
      w[f] = inward(areas[f], false);
      return Counterexample{realize(g, std::move(w)), f, p};
    }
  }
  return std::nullopt;
}

// Uniform sample on a rational grid inside each area.
inline Realization sample_realization(const UncertainGraph& g, const std::vector<Area>& areas,
                                      std::mt19937_64& rng) {
  constexpr int kGrid = 1024;
  std::vector<Weight> w;
  w.reserve(areas.size());
  for (const auto& a : areas) {
    if (a.is_trivial()) {
      w.push_back(a.inf());
      continue;
    }
    int lo = a.lo_open ? 1 : 0;
    int hi = kGrid - (a.hi_open ? 1 : 0);
    std::uniform_int_distribution<int> dist(lo, hi);
    int k = dist(rng);
    w.push_back(a.inf() + (a.sup() - a.inf()) * k / kGrid);
  }
  return realize(g, std::move(w));
}

}  // namespace umst
