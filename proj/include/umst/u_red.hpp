#pragma once

// The u-red online algorithm: insert edges in (L, U) order, delete an
// always-maximal edge from each cycle, and when a cycle has none, update
// the witness pair {f, g} and restart with the narrowed areas.

#include <cassert>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "umst/mst.hpp"

namespace umst {

struct RunEvent {
  enum class Kind { Add, Delete, UpdatePair, Return };
  int run = 0;
  Kind kind = Kind::Add;
  std::vector<EdgeIndex> edges;
  std::vector<VertexIndex> vertices;  // vertex reveals, used by the vertex model
};

// The unique cycle of an edge set that is a forest plus one edge,
// reported in path order around the cycle.
inline std::optional<std::vector<EdgeIndex>> try_find_unique_cycle(
    const UncertainGraph& g, const std::vector<EdgeIndex>& edges) {
  std::vector<int> degree(g.vertex_count(), 0);
  std::vector<bool> alive(g.edge_count(), false);
  for (EdgeIndex e : edges) {
    alive[e] = true;
    ++degree[g.edges[e].u];
    ++degree[g.edges[e].v];
  }
  // peel leaves until only the cycle remains
  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeIndex e : edges) {
      if (!alive[e]) continue;
      if (degree[g.edges[e].u] == 1 || degree[g.edges[e].v] == 1) {
        alive[e] = false;
        --degree[g.edges[e].u];
        --degree[g.edges[e].v];
        changed = true;
      }
    }
  }
  std::vector<EdgeIndex> rest;
  for (EdgeIndex e : edges)
    if (alive[e]) rest.push_back(e);
  if (rest.empty()) return std::nullopt;

  // walk the cycle starting from its lowest-index edge
  EdgeIndex start = *std::min_element(rest.begin(), rest.end());
  std::vector<EdgeIndex> cycle{start};
  std::vector<bool> used(g.edge_count(), false);
  used[start] = true;
  VertexIndex here = g.edges[start].v;
  VertexIndex stop = g.edges[start].u;
  while (here != stop) {
    bool advanced = false;
    for (EdgeIndex e : rest) {
      if (used[e]) continue;
      if (g.edges[e].u == here || g.edges[e].v == here) {
        used[e] = true;
        cycle.push_back(e);
        here = (g.edges[e].u == here) ? g.edges[e].v : g.edges[e].u;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;  // 2-cycle of parallel edges closes immediately
  }
  // parallel-edge 2-cycles: the walk above stops after one edge
  if (cycle.size() == 1) {
    for (EdgeIndex e : rest)
      if (e != start) cycle.push_back(e);
  }
  return cycle;
}

inline std::vector<EdgeIndex> find_unique_cycle(const UncertainGraph& g,
                                                const std::vector<EdgeIndex>& edges) {
  auto c = try_find_unique_cycle(g, edges);
  if (!c) throw Error(ErrorCode::NoCycle, "edge set is acyclic");
  return *c;
}

// Deletion choice: the most recently inserted edge when it qualifies
// (matching Kruskal's behaviour on trivial instances), else the
// lowest-index always-maximal edge.
inline std::optional<EdgeIndex> choose_always_maximal(const std::vector<Area>& areas,
                                                      const std::vector<EdgeIndex>& cycle,
                                                      EdgeIndex last_added,
                                                      const WeightOrder& ord) {
  if (always_maximal(areas, cycle, last_added, ord)) return last_added;
  std::optional<EdgeIndex> best;
  for (EdgeIndex e : cycle)
    if (e != last_added && always_maximal(areas, cycle, e, ord))
      if (!best || e < *best) best = e;
  return best;
}

struct FgDecision {
  EdgeIndex f = -1;
  EdgeIndex g = -1;
  std::vector<EdgeIndex> cycle;
};

// f maximizes U over the cycle; g maximizes U among the other edges with
// U_g > L_f. Both exist when the cycle has no always-maximal edge, and f
// is then non-trivial. Ties go to the lower index.
inline FgDecision choose_fg(const std::vector<Area>& areas, const std::vector<EdgeIndex>& cycle,
                            const WeightOrder& ord) {
  EdgeIndex f = -1;
  for (EdgeIndex e : cycle)
    if (f < 0 || areas[e].sup() > areas[f].sup() || (areas[e].sup() == areas[f].sup() && e < f))
      f = e;
  EdgeIndex g = -1;
  for (EdgeIndex e : cycle) {
    if (e == f || !ord.gt(areas[e].sup(), areas[f].inf())) continue;
    if (g < 0 || areas[e].sup() > areas[g].sup() || (areas[e].sup() == areas[g].sup() && e < g))
      g = e;
  }
  if (g < 0)
    throw Error(ErrorCode::NoCycle, "cycle without always-maximal edge must contain g with U_g > L_f");
  return FgDecision{f, g, cycle};
}

struct PassResult {
  std::optional<SpanningTree> tree;
  std::optional<FgDecision> decision;
};

// One run of u-red over fixed areas: either completes a tree or stops at
// the first cycle that forces an update pair. The working graph is a
// forest before every insertion, so each insertion closes at most one
// cycle.
inline PassResult ured_pass(const UncertainGraph& g, const std::vector<Area>& areas,
                            int run_no = 1, std::vector<RunEvent>* events = nullptr) {
  WeightOrder ord = g.order();
  std::vector<std::vector<std::pair<VertexIndex, EdgeIndex>>> adj(g.vertex_count());
  std::vector<EdgeIndex> present;

  auto forest_path = [&](VertexIndex from, VertexIndex to,
                         EdgeIndex skip) -> std::optional<std::vector<EdgeIndex>> {
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
      for (auto [y, e] : adj[x]) {
        if (e == skip || seen[y]) continue;
        seen[y] = true;
        via[y] = e;
        prev[y] = x;
        q.push(y);
      }
    }
    if (!seen[to]) return std::nullopt;
    std::vector<EdgeIndex> path;
    for (VertexIndex x = to; x != from; x = prev[x]) path.push_back(via[x]);
    std::reverse(path.begin(), path.end());
    return path;
  };

  auto attach = [&](EdgeIndex e) {
    present.push_back(e);
    adj[g.edges[e].u].push_back({g.edges[e].v, e});
    adj[g.edges[e].v].push_back({g.edges[e].u, e});
  };
  auto detach = [&](EdgeIndex e) {
    present.erase(std::find(present.begin(), present.end(), e));
    for (VertexIndex x : {g.edges[e].u, g.edges[e].v}) {
      auto& lst = adj[x];
      lst.erase(std::find_if(lst.begin(), lst.end(),
                             [&](const auto& p) { return p.second == e; }));
    }
  };
  auto log = [&](RunEvent::Kind k, std::vector<EdgeIndex> es) {
    if (events) events->push_back(RunEvent{run_no, k, std::move(es), {}});
  };

  for (EdgeIndex e : sorted_edge_order(areas)) {
    auto path = forest_path(g.edges[e].u, g.edges[e].v, e);
    attach(e);
    log(RunEvent::Kind::Add, {e});
    if (!path) continue;
    std::vector<EdgeIndex> cycle = *path;
    cycle.push_back(e);
    if (auto am = choose_always_maximal(areas, cycle, e, ord)) {
      detach(*am);
      log(RunEvent::Kind::Delete, {*am});
    } else {
      return PassResult{std::nullopt, choose_fg(areas, cycle, ord)};
    }
  }
  return PassResult{make_tree(std::move(present)), std::nullopt};
}

// A verifiable tree found without updates, if one exists: the u-red
// no-update path, cross-checked against the path criterion.
inline std::optional<SpanningTree> find_verifiable_tree(const UncertainGraph& g,
                                                        const std::vector<Area>& areas) {
  PassResult res = ured_pass(g, areas);
  if (!res.tree) return std::nullopt;
  if (!is_verified_mst(g, areas, *res.tree)) return std::nullopt;
  return res.tree;
}

inline std::optional<SpanningTree> find_verifiable_tree(const UncertainGraph& g) {
  return find_verifiable_tree(g, make_view(g).areas);
}

// Snapshot of the view just before a pair update, kept for witness-set
// checks against the oracle.
struct PairRecord {
  int run = 0;
  std::vector<Area> pre_areas;
  EdgeIndex f = -1;
  EdgeIndex g = -1;
};

struct RunResult {
  SpanningTree tree;
  UpdateTrace trace;
  int runs = 0;  // restarts + 1
  std::vector<RunEvent> events;
  std::vector<Area> final_areas;
  std::vector<PairRecord> pairs;
};

using RevealFn = std::function<Weight(EdgeIndex, const AlgoView&)>;

inline RunResult run_u_red(const UncertainGraph& g, const RevealFn& reveal) {
  AlgoView view = make_view(g);
  RunResult out;
  for (int run = 1; run <= g.edge_count() + 1; ++run) {
    PassResult res = ured_pass(g, view.areas, run, &out.events);
    if (res.tree) {
      out.events.push_back(RunEvent{run, RunEvent::Kind::Return, res.tree->edges, {}});
      out.tree = *res.tree;
      out.trace = view.trace;
      out.runs = run;
      out.final_areas = view.areas;
      return out;
    }
    const FgDecision& d = *res.decision;
    out.pairs.push_back(PairRecord{run, view.areas, d.f, d.g});
    // f is non-trivial by construction; g may already be trivial, in
    // which case there is nothing left to reveal for it.
    for (EdgeIndex e : {d.f, d.g})
      if (!view.areas[e].is_trivial()) update_edge_with(view, e, reveal(e, view));
    out.events.push_back(RunEvent{run, RunEvent::Kind::UpdatePair, {d.f, d.g}, {}});
  }
  throw std::logic_error("u-red failed to terminate");  // unreachable: every restart narrows f
}

inline RunResult run_u_red(const Instance& inst) {
  return run_u_red(inst.graph,
                   [&](EdgeIndex e, const AlgoView&) { return inst.truth.at(e); });
}

}  // namespace umst
