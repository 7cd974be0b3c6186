#include "matcode/code.hpp"

#include <stdexcept>

#include "matcode/rng.hpp"

namespace matcode {

LinearCode random_code(std::size_t n, unsigned k, const FieldPtr& f, std::uint64_t seed) {
  if (k > n) throw std::invalid_argument("dimension cannot exceed the length");
  if (k == 0) return LinearCode(ReprMatroid(Mat(f, 0, n)));
  Rng rng(seed);
  while (true) {
    Mat gen = Mat::random(f, k, n, rng);
    if (rank(gen) == k) return LinearCode(ReprMatroid(std::move(gen)));
  }
}

std::optional<GoodnessViolation> check_good_prefix(const std::vector<LinearCode>& seq,
                                                   const GoodnessParams& params,
                                                   EnumBudget budget) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const LinearCode& c = seq[i];
    const long long n = static_cast<long long>(c.length());
    if (n < static_cast<long long>(i))
      return GoodnessViolation{i, GoodnessViolation::kSize};
    if (!scaled_geq(c.dimension(), params.alpha, n))
      return GoodnessViolation{i, GoodnessViolation::kRate};
    const auto d = c.distance(budget);
    // a dimension-zero code has no distance; it can only pass when beta*n = 0
    const long long dv = d ? static_cast<long long>(*d) : 0;
    if (!scaled_geq(dv, params.beta, n))
      return GoodnessViolation{i, GoodnessViolation::kDistance};
  }
  return std::nullopt;
}

}  // namespace matcode
