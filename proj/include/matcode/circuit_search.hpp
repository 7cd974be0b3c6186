#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matcode/frame.hpp"
#include "matcode/graph.hpp"
#include "matcode/perturb.hpp"

namespace matcode {

struct MooreReport {
  int n = 0;
  double avg_degree = 0;
  unsigned girth = 0;
  double bound = 0;  // 4 + ln n / ln(avg_degree - 1)
  bool holds = false;
};

// Girth against the degree bound; requires average degree > 2 (and hence a
// cycle). holds can only be false through an implementation bug.
MooreReport moore_bound_check(const Multigraph& g);

struct ShortCycleBatch {
  std::vector<std::vector<int>> cycles;  // edge-id sets, extraction order
  double length_limit = 0;               // 2 ln n / ln(1+beta)
  bool preconditions_met = false;        // n and |E| above the guarantee floors
};

// Greedily extracts up to t edge-disjoint cycles of length at most the
// limit, deleting each cycle's edges before the next search. Preconditions
// are reported, never enforced; but when they hold, coming up short raises
// ContractViolation.
ShortCycleBatch disjoint_short_cycles(const Multigraph& g, unsigned t, double beta);

// (q-1)-level cover of a tree-normalized frame representation: tree arcs
// are copied at every level, a non-tree arc joins level 1 to its sign's
// level. Cycles up here project onto dependent column sets down below.
struct CoverGraph {
  Multigraph graph;
  std::vector<std::string> edge_origin;               // base arc id per edge
  std::vector<std::pair<int, std::uint32_t>> vertex_info;  // (base vertex, level)
  TreeNormalized base;
};

CoverGraph build_cover(const FrameRep& f);
std::string cover_to_dot(const CoverGraph& c);

struct DeficientSetReport {
  std::vector<std::string> elements;  // X: union of projected cycles
  unsigned rank = 0;                  // r_M(X)
  unsigned cycles_found = 0;
  double size_bound = 0;              // 4 t ln r(M) / ln(1+beta)
  bool preconditions_met = false;
  bool deficit_ok = false;            // r_M(X) <= |X| - t (when t cycles found)
  bool size_ok = false;               // |X| within size_bound
};

// Finds X with rank deficit >= t by projecting t short disjoint cover
// cycles. Each projected cycle is re-verified dependent; a failed
// verification, or missing cycles while the preconditions hold, raises
// ContractViolation.
DeficientSetReport rank_deficient_set(const FrameRep& f, unsigned t, double beta);

struct BoundConstants {
  unsigned k = 0;
  double beta = 0, beta_prime = 0;  // beta_prime = beta / 2
  std::uint32_t q = 0;
  long long c = 0;
};

// Least integer c at least the four closed-form floors plus k for which
// 4(k+1) ln(x+k) <= c ln(1+beta/2) ln(x) holds for every x >= c. The
// inequality is monotone once c ln(1+beta/2) > 4(k+1), so checking x = c
// suffices; always solvable, and c >= q.
BoundConstants bound_constant_c(unsigned k, double beta, std::uint32_t q);

struct CircuitReport {
  std::vector<std::string> circuit;
  long long c = 0;
  double bound = 0;            // what |circuit| is compared against
  bool within_bound = false;
  bool small_instance = false;  // coframe route only
  std::optional<DeficientSetReport> deficiency;  // frame route only
  std::vector<std::string> incident_set;         // coframe route: F
};

// Small circuit of a matroid within distance k (witnessed) of a connected
// frame-representable N: runs the deficient-set pipeline on N at (k+1,
// beta/2), checks the deficit survives the perturbation, then prunes to a
// circuit. The report compares |circuit| against c * ln r(M).
CircuitReport near_frame_circuit(const ReprMatroid& m, const PerturbWitness& w, double beta);

// Small circuit of a matroid whose dual is within distance k (witnessed) of
// a connected frame-representable N: the edges at the 2(k+1) lowest-degree
// vertices of N's graph span a rank drop in dual(m), hence contain a
// cocircuit of dual(m) = circuit of m. Compared against c = ceil(12(3k+1)/beta).
// Fewer than 2(k+1) vertices is a small instance, reported, with the circuit
// pruned from the full ground set instead.
CircuitReport near_coframe_circuit(const ReprMatroid& m, const PerturbWitness& w, unsigned k,
                                   double beta);

}  // namespace matcode
