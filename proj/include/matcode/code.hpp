#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matcode/matroid.hpp"
#include "matcode/rational.hpp"

namespace matcode {

// Linear-code view of a represented matroid: length n = |E|, dimension
// k = r(M), distance d = minimum cocircuit size. Puncturing is deletion,
// shortening is contraction.
class LinearCode {
 public:
  LinearCode() = default;
  explicit LinearCode(ReprMatroid m) : m_(std::move(m)) {}

  const ReprMatroid& matroid() const { return m_; }
  std::size_t length() const { return m_.size(); }
  unsigned dimension() const { return m_.rank(); }
  // nullopt for the zero code (k = 0).
  std::optional<unsigned> distance(EnumBudget budget = {}) const { return m_.cogirth(budget); }

  LinearCode punctured(const std::string& id) const { return LinearCode(m_.deleted({id})); }
  LinearCode shortened(const std::string& id) const { return LinearCode(m_.contracted({id})); }
  LinearCode dual() const { return LinearCode(m_.dual()); }

 private:
  ReprMatroid m_;
};

// k x n generator with i.i.d. uniform entries, redrawn until the rank is k.
// Same (n, k, field modulus, seed) always produces the same code.
LinearCode random_code(std::size_t n, unsigned k, const FieldPtr& f, std::uint64_t seed);

struct GoodnessParams {
  Rational alpha;  // rate floor, in (0, 1]
  Rational beta;   // relative distance floor, in (0, 1]
};

struct GoodnessViolation {
  std::size_t index;
  enum What { kSize, kRate, kDistance } what;
};

// Checks, for each code i in the sequence: n_i >= i, k_i >= alpha*n_i and
// d_i >= beta*n_i (exact rational comparisons). Returns the first failure.
std::optional<GoodnessViolation> check_good_prefix(const std::vector<LinearCode>& seq,
                                                   const GoodnessParams& params,
                                                   EnumBudget budget = {});

}  // namespace matcode
