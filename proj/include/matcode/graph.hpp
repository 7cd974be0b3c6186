#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace matcode {

// Undirected multigraph with loops; vertices are 0..vertex_count-1 and
// edges are addressed by their index in insertion order.
struct Multigraph {
  struct Edge {
    int u, v;
  };

  int vertex_count = 0;
  std::vector<Edge> edges;

  void add_edge(int u, int v) { edges.push_back({u, v}); }
  std::size_t edge_count() const { return edges.size(); }

  std::vector<int> degrees() const;  // a loop adds 2 at its vertex
  double average_degree() const;     // 2|E| / |V|
  bool connected() const;            // over every vertex, isolated ones included
  std::vector<int> component_ids() const;
};

struct CycleHit {
  unsigned length;
  std::vector<int> edge_ids;  // sorted ascending
};

// Exact shortest cycle: loops count 1, parallel pairs 2. nullopt for a
// forest. Deterministic: among the shortest cycles the scan produces, the
// lexicographically least edge-id set. `alive`, when given, masks edges out.
std::optional<CycleHit> shortest_cycle(const Multigraph& g, const std::vector<bool>* alive = nullptr);
std::optional<unsigned> graph_girth(const Multigraph& g);

// Every edge subset forming a single cycle (all degrees 2 on one component).
// Exact and exponential, so graphs beyond max_edges are refused.
std::vector<std::vector<int>> enumerate_cycles(const Multigraph& g, std::size_t max_edges = 12);

// BFS spanning tree rooted at vertex 0, neighbors in edge-insertion order;
// returns tree edge ids. Requires a connected graph.
std::vector<int> bfs_spanning_tree(const Multigraph& g);

}  // namespace matcode
