#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matcode/matrix.hpp"

namespace matcode {

// A represented matroid: an ordered list of ground element ids plus a
// generator matrix whose columns are indexed by them. The matroid is the
// column dependence structure of the row space. Values are immutable;
// minors return new objects and never rename surviving elements.
class ReprMatroid {
 public:
  ReprMatroid() = default;
  // Ground ids come from the matrix labels when present, else "0","1",...
  explicit ReprMatroid(Mat gen);
  ReprMatroid(Mat gen, std::vector<std::string> ground);

  const std::vector<std::string>& ground() const { return ground_; }
  const Mat& gen() const { return gen_; }
  const FieldPtr& field() const { return gen_.field(); }
  std::size_t size() const { return ground_.size(); }
  unsigned rank() const;

  bool has_element(const std::string& id) const;
  std::size_t index_of(const std::string& id) const;  // throws if absent

  // r(X) = dim of the row space restricted to the columns X.
  unsigned rank_of(const std::vector<std::string>& ids) const;

  ReprMatroid deleted(const std::vector<std::string>& ids) const;
  ReprMatroid contracted(const std::vector<std::string>& ids) const;
  ReprMatroid dual() const;

  // Minimum circuit size = minimum support of a nonzero kernel vector;
  // nullopt when the ground set is independent.
  std::optional<unsigned> girth(EnumBudget budget = {}) const;
  // Minimum cocircuit size = minimum weight of a nonzero row-space vector;
  // nullopt when the rank is zero.
  std::optional<unsigned> cogirth(EnumBudget budget = {}) const;

 private:
  Mat gen_;
  std::vector<std::string> ground_;
  mutable std::optional<unsigned> rank_cache_;
};

// Same ordered ground and identical canonical row space.
bool row_space_equal(const ReprMatroid& a, const ReprMatroid& b);

// True iff some nonzero column scaling maps a's row space to b's. The scan
// normalizes per-column pivot ratios and propagates them, so it prunes to
// near-linear work, but stays behind the configured element limit.
bool proj_equivalent(const ReprMatroid& a, const ReprMatroid& b, std::size_t limit = 12);

// Rank m+1 matroid of all 1-dimensional subspaces of F^(m+1): one column
// per subspace, first nonzero entry normalized to 1, enumeration order.
ReprMatroid projective_geometry(unsigned m, const FieldPtr& f);

// Block-diagonal sum; clashing ids from b gain "'" suffixes.
ReprMatroid direct_sum(const ReprMatroid& a, const ReprMatroid& b);

struct Separation {
  std::vector<std::string> part_a, part_b;  // ground order within each side
  unsigned rank_a = 0, rank_b = 0;
  unsigned order = 0;  // rank_a + rank_b - r(M) + 1
};

// nullopt when M is vertically t-connected: every partition (A,B) with
// r(A)+r(B) < r(M)+t-1 has a spanning side. Otherwise the violating
// separation of least order (ties: lexicographically least A). Exhaustive
// over partitions with |A| <= |E|/2; refuses |E| beyond the limit.
std::optional<Separation> vertical_separation(const ReprMatroid& m, unsigned t,
                                              std::size_t limit = 18);
inline bool vertical_connectivity(const ReprMatroid& m, unsigned t, std::size_t limit = 18) {
  return !vertical_separation(m, t, limit).has_value();
}

struct SplitReport {
  ReprMatroid n1, n2;  // contractions to each side of the separation
  std::optional<unsigned> cogirth_m, cogirth_n1, cogirth_n2;
  bool cogirth_bound_ok = false;  // cogirth(M) <= min over the sides
  bool sizes_ok = false;          // |N1| + |N2| = |M|
  bool ranks_ok = false;          // r(Ni) = r(M) - r(other part)
};

// Splits along a separation: N1 = M contracted to part A, N2 to part B,
// with the size/rank identities and the cocircuit bound re-verified.
SplitReport separation_split(const ReprMatroid& m, const Separation& s, EnumBudget budget = {});

// Does m / contract \ delete match n up to nonzero column scaling?
bool minor_witness_check(const ReprMatroid& m, const std::vector<std::string>& contract,
                         const std::vector<std::string>& del, const ReprMatroid& n,
                         std::size_t proj_limit = 12);

}  // namespace matcode
