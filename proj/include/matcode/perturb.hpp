#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matcode/matroid.hpp"

namespace matcode {

// Distance witness between two matroids on the same ground set E: a carrier
// matroid on E ∪ C ∪ D with
//   src = carrier / C \ D     dst = carrier / D \ C
// so src and dst are |C|+|D| elementary steps apart. C collects lift
// elements (contracted to recover src), D projection elements.
struct PerturbWitness {
  ReprMatroid carrier;
  std::vector<std::string> lift_ids;        // C
  std::vector<std::string> projection_ids;  // D
  ReprMatroid src, dst;

  unsigned k() const {
    return static_cast<unsigned>(lift_ids.size() + projection_ids.size());
  }
  // Recomputes both minors of the carrier and compares row spaces.
  bool verify() const;
};

// Builds a witness step by step. Lifts append a generator row plus a unit
// column; projections append a covector column. The carrier stays a single
// matroid throughout, so the composed witness needs no search.
class PerturbChain {
 public:
  explicit PerturbChain(ReprMatroid start);

  // Adds `row` (over E) to the row space of the current endpoint.
  void lift(const std::vector<std::uint32_t>& row);
  // Restricts the current endpoint's row space to the kernel of the
  // covector; one coefficient per current carrier row.
  void project(const std::vector<std::uint32_t>& covector);

  std::size_t carrier_rows() const { return carrier_.rows(); }
  std::size_t steps() const { return lift_ids_.size() + projection_ids_.size(); }
  PerturbWitness witness() const;
  ReprMatroid current() const;

 private:
  std::string fresh_id(const char* prefix, std::size_t seq) const;

  ReprMatroid start_;
  Mat carrier_;
  std::vector<std::string> ground_all_;
  std::vector<std::string> lift_ids_, projection_ids_;
};

// One elementary projection: appends the covector as a column at a fresh
// element e and contracts it. Rank stays or drops by one; with a full-row-
// rank generator it drops exactly when the combined row c^T gen is nonzero.
std::pair<ReprMatroid, PerturbWitness> project_by_covector(const ReprMatroid& m,
                                                           const std::vector<std::uint32_t>& c);

// One elementary lift: generator gains the row (w | 1) and a fresh column e.
// Deleting e keeps the enlarged row space; contracting it recovers m.
std::pair<ReprMatroid, PerturbWitness> lift_by_row(const ReprMatroid& m,
                                                   const std::vector<std::uint32_t>& w);

struct DeviationReport {
  unsigned max_deviation = 0;
  bool within = false;      // max_deviation <= k
  bool exhaustive = false;  // full subset scan vs. sampled
};

// max |r_M(Y) - r_N(Y)| over subsets Y; exhaustive up to exhaustive_limit
// elements, seeded sampling beyond.
DeviationReport rank_deviation_check(const ReprMatroid& m, const ReprMatroid& n, unsigned k,
                                     std::size_t exhaustive_limit = 18,
                                     std::size_t samples = 20000,
                                     std::uint64_t sample_seed = 1);

struct DegradationReport {
  bool src_connected = false;  // vertical t-connectivity of m
  bool vacuous = false;        // t - 2k <= 1
  bool checked = false;        // n actually tested
  bool holds = true;
};

// If m is vertically t-connected, n (within distance k) must be vertically
// (t-2k)-connected; a fail raises ContractViolation. t-2k <= 1 is vacuous.
DegradationReport connectivity_degradation_check(const ReprMatroid& m, const ReprMatroid& n,
                                                 unsigned k, unsigned t, std::size_t limit = 18);

}  // namespace matcode
