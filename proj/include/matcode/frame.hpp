#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matcode/graph.hpp"
#include "matcode/matrix.hpp"
#include "matcode/matroid.hpp"

namespace matcode {

// Arc of a field-labelled directed multigraph. Labels are nonzero field
// values; vertices are matrix row indices.
struct Arc {
  std::string id;
  int tail, head;
  std::uint32_t label;
};

struct LabelledDigraph {
  int vertex_count = 0;
  std::vector<Arc> arcs;
  FieldPtr field;

  Multigraph underlying() const;
  const Arc* find_arc(const std::string& id) const;
};

// Every column has at most two nonzero entries.
bool is_frame_matrix(const Mat& a);

// A frame generator for M with at most r(M)+1 rows and the ground ids as
// labels. An already-frame generator keeps its rows (dependent ones pruned);
// otherwise a bounded basis search runs, refusing |E| beyond search_limit.
// Over GF(2) a parity row (the componentwise row sum) is appended whenever
// some column has odd support, so every column becomes graph-representable.
Mat frame_normalize(const ReprMatroid& m, std::size_t search_limit = 10);

// Graph of a frame matrix, one arc per column:
//   two nonzeros at rows x < y  ->  arc x->y labelled -A[e,x] / A[e,y]
//   one nonzero at row x        ->  loop at x, least label outside {0, 1}
//                                   (no such label exists over GF(2): error)
//   zero column                 ->  loop at vertex 0, label 1
LabelledDigraph graph_representation(const Mat& a);

// A frame matrix together with its graph; arc i corresponds to column i.
struct FrameRep {
  Mat matrix;
  LabelledDigraph graph;

  static FrameRep from_matrix(Mat a);
  // Normalizes first; see frame_normalize.
  static FrameRep from_matroid(const ReprMatroid& m, std::size_t search_limit = 10);
  ReprMatroid matroid() const { return ReprMatroid(matrix); }
};

// A closed walk v0 e0 v1 e1 ... e_{m-1} v0 traversing a cycle: vertices
// distinct, arcs distinct, arc i joining v_i and v_{i+1} in either direction.
struct CycleWalk {
  std::vector<int> vertices;
  std::vector<std::string> arcs;
};

// Product of labels, forward arcs direct and backward arcs inverted.
std::uint32_t cycle_sign(const LabelledDigraph& g, const CycleWalk& walk);
bool is_balanced(const LabelledDigraph& g, const CycleWalk& walk);

// Canonical closed walk for an arc-id set that forms a cycle of the
// underlying graph (least vertex first, least incident arc id outgoing).
CycleWalk walk_of_cycle(const LabelledDigraph& g, const std::vector<std::string>& arc_ids);

// Switches labels across the cut (V-W, W): arcs into W gain a factor gamma,
// arcs out of W gain gamma^{-1}. Cycle signs of balanced cycles survive.
LabelledDigraph resign(const LabelledDigraph& g, std::uint32_t gamma, const std::vector<int>& w_side);

// Sorted arc-id sets of all balanced cycles; exponential, capped by max_edges.
std::vector<std::vector<std::string>> balanced_cycles(const LabelledDigraph& g,
                                                      std::size_t max_edges = 12);

struct TreeNormalized {
  FrameRep rep;
  std::vector<std::string> tree_arcs;      // BFS tree from vertex 0
  std::vector<std::uint32_t> row_scales;   // the applied per-row scaling
};

// Rescales rows so every BFS spanning-tree arc gets label 1. Non-tree arc
// labels become their fundamental-cycle signs. Requires a connected graph.
TreeNormalized tree_normalize(const FrameRep& f);

enum class ArcSetClass { kBalancedCycle, kMinDegreeTwoNonCycle, kOther };

struct DependenceReport {
  ArcSetClass cls;
  unsigned rank;
  std::size_t size;
  bool dependent;  // rank < size
};

// Classifies an arc set and checks dependence of the matching columns.
// Balanced cycles and connected min-degree-2 non-cycles must be dependent;
// a fail there raises ContractViolation. "Other" sets are just reported.
DependenceReport check_dependent_structure(const FrameRep& f, const std::vector<std::string>& arc_ids);

bool graph_connected(const LabelledDigraph& g);

}  // namespace matcode
