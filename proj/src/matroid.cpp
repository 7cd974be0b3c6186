#include "matcode/matroid.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "matcode/errors.hpp"

namespace matcode {

namespace {

std::vector<std::string> default_ids(std::size_t n) {
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
  return ids;
}

void require_distinct(const std::vector<std::string>& ids) {
  std::set<std::string> seen(ids.begin(), ids.end());
  if (seen.size() != ids.size()) throw std::invalid_argument("ground ids must be distinct");
}

// first k-subset is {0..k-1}; returns false after the last one
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + (k - i) < n) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

ReprMatroid::ReprMatroid(Mat gen) : gen_(std::move(gen)) {
  ground_ = gen_.has_labels() ? gen_.labels() : default_ids(gen_.cols());
  require_distinct(ground_);
  gen_.set_labels(ground_);
}

ReprMatroid::ReprMatroid(Mat gen, std::vector<std::string> ground)
    : gen_(std::move(gen)), ground_(std::move(ground)) {
  if (ground_.size() != gen_.cols())
    throw std::invalid_argument("one ground id per column expected");
  require_distinct(ground_);
  gen_.set_labels(ground_);
}

unsigned ReprMatroid::rank() const {
  if (!rank_cache_) rank_cache_ = static_cast<unsigned>(matcode::rank(gen_));
  return *rank_cache_;
}

bool ReprMatroid::has_element(const std::string& id) const {
  return std::find(ground_.begin(), ground_.end(), id) != ground_.end();
}

std::size_t ReprMatroid::index_of(const std::string& id) const {
  const auto it = std::find(ground_.begin(), ground_.end(), id);
  if (it == ground_.end()) throw std::invalid_argument("unknown element: " + id);
  return static_cast<std::size_t>(it - ground_.begin());
}

unsigned ReprMatroid::rank_of(const std::vector<std::string>& ids) const {
  std::set<std::size_t> idx;
  for (const auto& id : ids) idx.insert(index_of(id));
  return static_cast<unsigned>(
      matcode::rank(gen_.col_subset({idx.begin(), idx.end()})));
}

ReprMatroid ReprMatroid::deleted(const std::vector<std::string>& ids) const {
  std::set<std::size_t> drop;
  for (const auto& id : ids) drop.insert(index_of(id));
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < ground_.size(); ++j)
    if (!drop.count(j)) keep.push_back(j);
  return ReprMatroid(gen_.col_subset(keep));
}

ReprMatroid ReprMatroid::dual() const {
  const auto basis = nullspace(gen_);
  Mat d = basis.empty() ? Mat(field(), 0, gen_.cols()) : Mat::from_rows(field(), basis);
  return ReprMatroid(std::move(d), ground_);
}

ReprMatroid ReprMatroid::contracted(const std::vector<std::string>& ids) const {
  return dual().deleted(ids).dual();
}

std::optional<unsigned> ReprMatroid::girth(EnumBudget budget) const {
  const std::size_t n = size();
  const unsigned r = rank();
  if (r == n) return std::nullopt;  // independent ground set

  const double q = static_cast<double>(field()->q());
  const double span_candidates = std::pow(q, static_cast<double>(n - r));
  if (span_candidates <= static_cast<double>(budget.max_candidates)) {
    const auto w = min_weight(nullspace(gen_), field(), budget);
    return w ? std::optional<unsigned>(w->weight) : std::nullopt;
  }

  // dependence scan by subset size; any (r+1)-set is dependent so this stops
  std::uint64_t used = 0;
  for (std::size_t w = 1; w <= std::min<std::size_t>(n, r + 1); ++w) {
    std::vector<std::size_t> c(w);
    for (std::size_t i = 0; i < w; ++i) c[i] = i;
    do {
      if (++used > budget.max_candidates)
        throw BudgetExceeded("dependence scan exceeds the budget");
      if (matcode::rank(gen_.col_subset(c)) < w) return static_cast<unsigned>(w);
    } while (next_combination(c, n));
  }
  return std::nullopt;  // unreachable: r < n guarantees a dependent set
}

std::optional<unsigned> ReprMatroid::cogirth(EnumBudget budget) const {
  if (rank() == 0) return std::nullopt;
  return dual().girth(budget);
}

bool row_space_equal(const ReprMatroid& a, const ReprMatroid& b) {
  if (!a.field()->same_as(*b.field())) return false;
  if (a.ground() != b.ground()) return false;
  const auto ra = rref(a.gen());
  const auto rb = rref(b.gen());
  if (ra.pivots != rb.pivots) return false;
  for (std::size_t i = 0; i < ra.pivots.size(); ++i)
    if (ra.reduced.row(i) != rb.reduced.row(i)) return false;
  return true;
}

namespace {

// union-find over column scales; d[x] = weight[x] * d[root(x)]
class ScaleClasses {
 public:
  ScaleClasses(const Field& f, std::size_t n)
      : f_(f), parent_(n), weight_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::pair<std::size_t, std::uint32_t> find(std::size_t x) {
    if (parent_[x] == x) return {x, weight_[x]};
    auto [root, w] = find(parent_[x]);
    parent_[x] = root;
    weight_[x] = f_.mul(weight_[x], w);
    return {root, weight_[x]};
  }

  // impose d[a] = ratio * d[b]; false on contradiction
  bool relate(std::size_t a, std::size_t b, std::uint32_t ratio) {
    auto [ra, wa] = find(a);
    auto [rb, wb] = find(b);
    const std::uint32_t rhs = f_.mul(ratio, wb);
    if (ra == rb) return wa == rhs;
    parent_[ra] = rb;
    weight_[ra] = f_.mul(f_.inv(wa), rhs);
    return true;
  }

 private:
  const Field& f_;
  std::vector<std::size_t> parent_;
  std::vector<std::uint32_t> weight_;
};

}  // namespace

bool proj_equivalent(const ReprMatroid& a, const ReprMatroid& b, std::size_t limit) {
  if (!a.field()->same_as(*b.field()))
    throw std::invalid_argument("projective comparison needs a common field");
  if (a.size() > limit || b.size() > limit)
    throw BudgetExceeded("projective comparison refused above the element limit");
  if (a.ground() != b.ground()) return false;

  const Field& f = *a.field();
  const auto ra = rref(a.gen());
  const auto rb = rref(b.gen());
  // column scaling never moves pivots, so these must line up exactly
  if (ra.pivots != rb.pivots) return false;
  const std::size_t k = ra.pivots.size();
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((ra.reduced.at(i, j) == 0) != (rb.reduced.at(i, j) == 0)) return false;

  // rref(A·D) row i equals R1 row i scaled entrywise by d_j / d_{pivot(i)},
  // so each nonzero entry pins the ratio d_j : d_{pivot(i)}
  ScaleClasses classes(f, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t x = ra.reduced.at(i, j);
      if (x == 0) continue;
      const std::uint32_t ratio = f.div(rb.reduced.at(i, j), x);
      if (!classes.relate(j, ra.pivots[i], ratio)) return false;
    }
  return true;
}

ReprMatroid projective_geometry(unsigned m, const FieldPtr& f) {
  const std::uint64_t q = f->q();
  const double total = std::pow(static_cast<double>(q), static_cast<double>(m) + 1);
  if (total > static_cast<double>(1u << 26))
    throw std::invalid_argument("projective geometry too large to enumerate");

  const std::size_t dim = m + 1;
  std::vector<std::vector<std::uint32_t>> cols;
  const std::uint64_t end = static_cast<std::uint64_t>(total);
  for (std::uint64_t v = 1; v < end; ++v) {
    std::vector<std::uint32_t> coord(dim);
    std::uint64_t t = v;
    for (std::size_t i = 0; i < dim; ++i) {
      coord[i] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    std::size_t first = 0;
    while (coord[first] == 0) ++first;
    if (coord[first] != 1) continue;  // one representative per line
    cols.push_back(std::move(coord));
  }

  Mat gen(f, dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) gen.set(i, j, cols[j][i]);
  return ReprMatroid(std::move(gen));
}

ReprMatroid direct_sum(const ReprMatroid& a, const ReprMatroid& b) {
  if (!a.field()->same_as(*b.field()))
    throw std::invalid_argument("direct sum needs a common field");
  const std::size_t ra = a.gen().rows(), rb = b.gen().rows();
  const std::size_t na = a.size(), nb = b.size();
  Mat gen(a.field(), ra + rb, na + nb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < na; ++j) gen.set(i, j, a.gen().at(i, j));
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < nb; ++j) gen.set(ra + i, na + j, b.gen().at(i, j));

  std::set<std::string> used(a.ground().begin(), a.ground().end());
  std::vector<std::string> ground = a.ground();
  for (std::string id : b.ground()) {
    while (used.count(id)) id += "'";
    used.insert(id);
    ground.push_back(id);
  }
  return ReprMatroid(std::move(gen), std::move(ground));
}

std::optional<Separation> vertical_separation(const ReprMatroid& m, unsigned t,
                                              std::size_t limit) {
  const std::size_t n = m.size();
  if (n > limit)
    throw BudgetExceeded("separation scan refused above the element limit");
  if (n < 2) return std::nullopt;
  const unsigned r = m.rank();

  std::optional<Separation> best;
  std::vector<std::size_t> best_a;
  // element 0 always sits in side A, so each unordered partition shows once
  const std::uint64_t full = (std::uint64_t(1) << n) - 1;
  for (std::uint64_t mask = 1; mask < full; mask += 2) {
    std::vector<std::size_t> ia, ib;
    for (std::size_t j = 0; j < n; ++j)
      ((mask >> j) & 1 ? ia : ib).push_back(j);
    const unsigned rank_a = static_cast<unsigned>(rank(m.gen().col_subset(ia)));
    const unsigned rank_b = static_cast<unsigned>(rank(m.gen().col_subset(ib)));
    if (rank_a == r || rank_b == r) continue;  // a spanning side saves it
    const long long threshold = static_cast<long long>(r) + t - 1;
    if (static_cast<long long>(rank_a) + rank_b >= threshold) continue;  // not a violation
    const unsigned order = rank_a + rank_b - r + 1;
    if (best && (order > best->order || (order == best->order && ia >= best_a))) continue;
    Separation s;
    for (std::size_t j : ia) s.part_a.push_back(m.ground()[j]);
    for (std::size_t j : ib) s.part_b.push_back(m.ground()[j]);
    s.rank_a = rank_a;
    s.rank_b = rank_b;
    s.order = order;
    best = std::move(s);
    best_a = std::move(ia);
  }
  return best;
}

SplitReport separation_split(const ReprMatroid& m, const Separation& s, EnumBudget budget) {
  SplitReport rep;
  rep.n1 = m.contracted(s.part_b);
  rep.n2 = m.contracted(s.part_a);
  rep.cogirth_m = m.cogirth(budget);
  rep.cogirth_n1 = rep.n1.cogirth(budget);
  rep.cogirth_n2 = rep.n2.cogirth(budget);

  constexpr std::uint64_t kInf = ~std::uint64_t(0);
  const auto val = [](const std::optional<unsigned>& v) {
    return v ? static_cast<std::uint64_t>(*v) : kInf;
  };
  rep.cogirth_bound_ok =
      val(rep.cogirth_m) <= std::min(val(rep.cogirth_n1), val(rep.cogirth_n2));
  rep.sizes_ok = rep.n1.size() + rep.n2.size() == m.size();
  const unsigned r = m.rank();
  rep.ranks_ok = rep.n1.rank() == r - m.rank_of(s.part_b) &&
                 rep.n2.rank() == r - m.rank_of(s.part_a);

  if (!rep.cogirth_bound_ok)
    throw ContractViolation("split raised the minimum cocircuit size",
                            "every cocircuit of a contraction is one of the original");
  if (!rep.sizes_ok)
    throw ContractViolation("split lost or duplicated elements",
                            "the two sides partition the ground set");
  if (!rep.ranks_ok)
    throw ContractViolation("split rank identity failed",
                            "r(M/X) = r(M) - r(X) for every X");
  return rep;
}

bool minor_witness_check(const ReprMatroid& m, const std::vector<std::string>& contract,
                         const std::vector<std::string>& del, const ReprMatroid& n,
                         std::size_t proj_limit) {
  for (const auto& id : contract)
    if (std::find(del.begin(), del.end(), id) != del.end())
      throw std::invalid_argument("contract and delete sets overlap at " + id);
  const ReprMatroid minor = m.contracted(contract).deleted(del);
  if (minor.ground() != n.ground()) return false;
  return proj_equivalent(minor, n, proj_limit);
}

}  // namespace matcode
