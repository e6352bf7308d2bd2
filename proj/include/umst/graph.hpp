#pragma once

// Edge-uncertainty graphs, hidden-truth instances, the algorithm's
// narrowed view, and the (L, U) edge order.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "umst/area.hpp"
#include "umst/errors.hpp"

namespace umst {

using VertexIndex = int;
using EdgeIndex = int;

struct EdgeData {
  std::string name;  // opaque id in files; dense index internally
  VertexIndex u = -1;
  VertexIndex v = -1;
  Area area = Area::trivial(Weight(0));
};

struct UncertainGraph {
  std::vector<std::string> vertex_names;
  std::vector<EdgeData> edges;
  // Comparison tolerance for all limit orderings on this graph; zero for
  // the exact edge model, 1e-9 for instances projected from geometry.
  Weight tolerance{0};

  int vertex_count() const { return static_cast<int>(vertex_names.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  WeightOrder order() const { return WeightOrder{tolerance}; }

  std::optional<VertexIndex> vertex_by_name(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
      if (vertex_names[i] == name) return i;
    return std::nullopt;
  }
  std::optional<EdgeIndex> edge_by_name(const std::string& name) const {
    for (int i = 0; i < edge_count(); ++i)
      if (edges[i].name == name) return i;
    return std::nullopt;
  }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

inline bool is_connected(const UncertainGraph& g) {
  if (g.vertex_count() == 0) return true;
  detail::UnionFind uf(g.vertex_count());
  int components = g.vertex_count();
  for (const auto& e : g.edges)
    if (uf.unite(e.u, e.v)) --components;
  return components == 1;
}

// Structural validation: ids, endpoints, connectivity. Parallel edges are
// permitted (generators may emit multigraphs); self-loops are not.
inline void validate_graph(const UncertainGraph& g) {
  if (g.vertex_count() == 0) throw Error(ErrorCode::BadInput, "graph has no vertices");
  {
    std::map<std::string, int> seen;
    for (const auto& n : g.vertex_names)
      if (++seen[n] > 1) throw Error(ErrorCode::BadInput, "duplicate vertex id '" + n + "'");
  }
  {
    std::map<std::string, int> seen;
    for (const auto& e : g.edges)
      if (++seen[e.name] > 1) throw Error(ErrorCode::BadInput, "duplicate edge id '" + e.name + "'");
  }
  for (const auto& e : g.edges) {
    if (e.u < 0 || e.u >= g.vertex_count() || e.v < 0 || e.v >= g.vertex_count())
      throw Error(ErrorCode::BadInput, "edge '" + e.name + "' has an unknown endpoint");
    if (e.u == e.v) throw Error(ErrorCode::BadInput, "self-loop '" + e.name + "'");
  }
  if (!is_connected(g)) throw Error(ErrorCode::BadInput, "graph is not connected");
}

// A weighted graph: one exact weight per edge of g.
struct Realization {
  const UncertainGraph* graph = nullptr;
  std::vector<Weight> weights;
};

inline Realization realize(const UncertainGraph& g, std::vector<Weight> weights) {
  if (static_cast<int>(weights.size()) != g.edge_count())
    throw Error(ErrorCode::NotARealization, "expected one weight per edge");
  WeightOrder ord = g.order();
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!g.edges[i].area.contains(weights[i], ord))
      throw Error(ErrorCode::NotARealization,
                  "weight " + format_weight(weights[i]) + " of edge '" + g.edges[i].name +
                      "' is outside " + g.edges[i].area.str());
  }
  return Realization{&g, std::move(weights)};
}

// An uncertainty graph plus its hidden truth (a realization).
struct Instance {
  UncertainGraph graph;
  std::vector<Weight> truth;
};

inline void validate_instance(const Instance& inst) {
  validate_graph(inst.graph);
  realize(inst.graph, inst.truth);  // throws NotARealization on violation
}

struct UpdateTrace {
  std::vector<EdgeIndex> updated;

  bool contains(EdgeIndex e) const {
    return std::find(updated.begin(), updated.end(), e) != updated.end();
  }
  int count() const { return static_cast<int>(updated.size()); }
};

// The algorithm's current knowledge: areas narrowed by all updates so far.
struct AlgoView {
  const UncertainGraph* graph = nullptr;
  std::vector<Area> areas;
  UpdateTrace trace;
};

inline AlgoView make_view(const UncertainGraph& g) {
  AlgoView v;
  v.graph = &g;
  v.areas.reserve(g.edges.size());
  for (const auto& e : g.edges) v.areas.push_back(e.area);
  return v;
}

// Reveals an exact value for edge e. Updating a trivial area is rejected:
// OPT never does it, and counting it would distort ratios.
inline void update_edge_with(AlgoView& view, EdgeIndex e, const Weight& w) {
  if (e < 0 || e >= static_cast<int>(view.areas.size()))
    throw Error(ErrorCode::BadInput, "no such edge index");
  if (view.areas[e].is_trivial())
    throw Error(ErrorCode::WastedUpdate,
                "edge '" + view.graph->edges[e].name + "' is already trivial");
  WeightOrder ord = view.graph->order();
  if (!view.areas[e].contains(w, ord))
    throw Error(ErrorCode::InconsistentReveal,
                "revealed " + format_weight(w) + " outside " + view.areas[e].str() +
                    " for edge '" + view.graph->edges[e].name + "'");
  view.areas[e] = Area::trivial(w);
  view.trace.updated.push_back(e);
}

inline void update_edge(AlgoView& view, const Instance& inst, EdgeIndex e) {
  update_edge_with(view, e, inst.truth.at(e));
}

enum class EdgeOrder { Before, After, EqualLimits };

// e < f iff L_e < L_f, or L_e == L_f and U_e < U_f. Equal-limit edges are
// reported as such; a strict total order tie-breaks by ascending index.
inline EdgeOrder compare_edges(const Area& e, const Area& f) {
  if (e.lo != f.lo) return e.lo < f.lo ? EdgeOrder::Before : EdgeOrder::After;
  if (e.hi != f.hi) return e.hi < f.hi ? EdgeOrder::Before : EdgeOrder::After;
  return EdgeOrder::EqualLimits;
}

// Edge indices sorted by (L, U, index).
inline std::vector<EdgeIndex> sorted_edge_order(const std::vector<Area>& areas) {
  std::vector<EdgeIndex> order(areas.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
    switch (compare_edges(areas[a], areas[b])) {
      case EdgeOrder::Before: return true;
      case EdgeOrder::After: return false;
      case EdgeOrder::EqualLimits: return a < b;
    }
    return false;
  });
  return order;
}

}  // namespace umst
