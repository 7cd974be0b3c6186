#include "matcode/perturb.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "matcode/errors.hpp"

namespace matcode {

bool PerturbWitness::verify() const {
  const ReprMatroid a = carrier.contracted(lift_ids).deleted(projection_ids);
  const ReprMatroid b = carrier.contracted(projection_ids).deleted(lift_ids);
  return row_space_equal(a, src) && row_space_equal(b, dst);
}

PerturbChain::PerturbChain(ReprMatroid start)
    : start_(std::move(start)), carrier_(start_.gen()), ground_all_(start_.ground()) {}

std::string PerturbChain::fresh_id(const char* prefix, std::size_t seq) const {
  std::string id = prefix + std::to_string(seq);
  while (std::find(ground_all_.begin(), ground_all_.end(), id) != ground_all_.end())
    id = prefix + std::to_string(++seq);
  return id;
}

void PerturbChain::lift(const std::vector<std::uint32_t>& row) {
  if (row.size() != start_.size())
    throw std::invalid_argument("lift row has " + std::to_string(row.size()) +
                                " entries for a ground set of " + std::to_string(start_.size()));
  const std::string id = fresh_id("+l", lift_ids_.size());
  // Unit column keeps the old endpoint recoverable: contracting it pivots the
  // new row away without touching the others.
  carrier_ = carrier_.with_col_appended(std::vector<std::uint32_t>(carrier_.rows(), 0), id);
  std::vector<std::uint32_t> extended(carrier_.cols(), 0);
  std::copy(row.begin(), row.end(), extended.begin());
  extended.back() = 1;
  carrier_ = carrier_.with_row_appended(extended);
  ground_all_.push_back(id);
  lift_ids_.push_back(id);
}

void PerturbChain::project(const std::vector<std::uint32_t>& covector) {
  if (covector.size() != carrier_.rows())
    throw std::invalid_argument("covector has " + std::to_string(covector.size()) +
                                " coefficients for " + std::to_string(carrier_.rows()) +
                                " carrier rows");
  const std::string id = fresh_id("+p", projection_ids_.size());
  carrier_ = carrier_.with_col_appended(covector, id);
  ground_all_.push_back(id);
  projection_ids_.push_back(id);
}

ReprMatroid PerturbChain::current() const {
  return ReprMatroid(carrier_).contracted(projection_ids_).deleted(lift_ids_);
}

PerturbWitness PerturbChain::witness() const {
  return PerturbWitness{ReprMatroid(carrier_), lift_ids_, projection_ids_, start_, current()};
}

std::pair<ReprMatroid, PerturbWitness> project_by_covector(const ReprMatroid& m,
                                                           const std::vector<std::uint32_t>& c) {
  PerturbChain chain(m);
  chain.project(c);
  return {chain.current(), chain.witness()};
}

std::pair<ReprMatroid, PerturbWitness> lift_by_row(const ReprMatroid& m,
                                                   const std::vector<std::uint32_t>& w) {
  PerturbChain chain(m);
  chain.lift(w);
  return {chain.current(), chain.witness()};
}

DeviationReport rank_deviation_check(const ReprMatroid& m, const ReprMatroid& n, unsigned k,
                                     std::size_t exhaustive_limit, std::size_t samples,
                                     std::uint64_t sample_seed) {
  std::vector<std::string> ga = m.ground(), gb = n.ground();
  std::sort(ga.begin(), ga.end());
  std::sort(gb.begin(), gb.end());
  if (ga != gb) throw std::invalid_argument("rank deviation needs matching ground sets");

  const std::vector<std::string>& ground = m.ground();
  const std::size_t e = ground.size();
  DeviationReport rep;
  std::vector<std::string> ids;
  ids.reserve(e);
  const auto probe = [&]() {
    const unsigned ra = m.rank_of(ids);
    const unsigned rb = n.rank_of(ids);
    const unsigned dev = ra > rb ? ra - rb : rb - ra;
    if (dev > rep.max_deviation) rep.max_deviation = dev;
  };

  if (e <= exhaustive_limit && e < 63) {
    rep.exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << e); ++mask) {
      ids.clear();
      for (std::size_t j = 0; j < e; ++j)
        if (mask >> j & 1) ids.push_back(ground[j]);
      probe();
    }
  } else {
    std::mt19937_64 rng(sample_seed);
    for (std::size_t s = 0; s < samples; ++s) {
      ids.clear();
      std::uint64_t word = 0;
      for (std::size_t j = 0; j < e; ++j) {
        if (j % 64 == 0) word = rng();
        if (word >> (j % 64) & 1) ids.push_back(ground[j]);
      }
      probe();
    }
  }
  rep.within = rep.max_deviation <= k;
  return rep;
}

DegradationReport connectivity_degradation_check(const ReprMatroid& m, const ReprMatroid& n,
                                                 unsigned k, unsigned t, std::size_t limit) {
  DegradationReport rep;
  rep.src_connected = vertical_connectivity(m, t, limit);
  rep.vacuous = static_cast<long long>(t) - 2ll * k <= 1;
  if (!rep.src_connected || rep.vacuous) return rep;

  const unsigned t2 = t - 2 * k;
  rep.checked = true;
  const auto sep = vertical_separation(n, t2, limit);
  rep.holds = !sep.has_value();
  if (!rep.holds) {
    std::ostringstream diag;
    diag << "source is vertically " << t << "-connected but a " << k
         << "-step perturbation lost vertical " << t2 << "-connectivity: separation order "
         << sep->order << " with |A|=" << sep->part_a.size() << " |B|=" << sep->part_b.size();
    throw ContractViolation("perturbation degraded connectivity beyond its step count",
                            diag.str());
  }
  return rep;
}

}  // namespace matcode
