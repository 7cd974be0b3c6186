#include "matcode/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "matcode/errors.hpp"

namespace matcode {

Mat::Mat(FieldPtr f, std::size_t rows, std::size_t cols)
    : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_) throw std::invalid_argument("matrix needs a field");
}

Mat Mat::identity(FieldPtr f, std::size_t n) {
  Mat m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(FieldPtr f, const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Mat m(std::move(f), r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Mat Mat::random(FieldPtr f, std::size_t rows, std::size_t cols, Rng& rng) {
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.set(i, j, rng.below32(f->q()));
  return m;
}

void Mat::set(std::size_t r, std::size_t c, std::uint32_t v) {
  if (v >= field_->q()) throw std::invalid_argument("entry out of field range");
  data_[r * cols_ + c] = v;
}

void Mat::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != cols_)
    throw std::invalid_argument("label count must match column count");
  labels_ = std::move(labels);
}

std::vector<std::uint32_t> Mat::row(std::size_t r) const {
  return std::vector<std::uint32_t>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<std::uint32_t> Mat::col(std::size_t c) const {
  std::vector<std::uint32_t> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
  return out;
}

Mat Mat::transposed() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

Mat Mat::times(const Mat& o) const {
  if (!field_->same_as(*o.field_)) throw std::invalid_argument("field mismatch");
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
  const Field& f = *field_;
  Mat r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint32_t a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const std::uint32_t b = o.at(k, j);
        if (b == 0) continue;
        r.set(i, j, f.add(r.at(i, j), f.mul(a, b)));
      }
    }
  return r;
}

std::vector<std::uint32_t> Mat::combine_rows(const std::vector<std::uint32_t>& coef) const {
  if (coef.size() != rows_) throw std::invalid_argument("one coefficient per row expected");
  const Field& f = *field_;
  std::vector<std::uint32_t> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (coef[i] == 0) continue;
    for (std::size_t j = 0; j < cols_; ++j)
      out[j] = f.add(out[j], f.mul(coef[i], at(i, j)));
  }
  return out;
}

std::vector<std::uint32_t> Mat::apply(const std::vector<std::uint32_t>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("one coordinate per column expected");
  const Field& f = *field_;
  std::vector<std::uint32_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && x[j] != 0) out[i] = f.add(out[i], f.mul(at(i, j), x[j]));
  return out;
}

Mat Mat::col_subset(const std::vector<std::size_t>& idx) const {
  Mat m(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw std::invalid_argument("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) m.set(i, j, at(i, idx[j]));
  }
  if (!labels_.empty()) {
    std::vector<std::string> l(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) l[j] = labels_[idx[j]];
    m.set_labels(std::move(l));
  }
  return m;
}

Mat Mat::with_row_appended(const std::vector<std::uint32_t>& row) const {
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  Mat m(field_, rows_ + 1, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
  for (std::size_t j = 0; j < cols_; ++j) m.set(rows_, j, row[j]);
  m.labels_ = labels_;
  return m;
}

Mat Mat::with_col_appended(const std::vector<std::uint32_t>& col, const std::string& label) const {
  if (col.size() != rows_) throw std::invalid_argument("column length mismatch");
  Mat m(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, at(i, j));
    m.set(i, cols_, col[i]);
  }
  if (!labels_.empty() || !label.empty()) {
    std::vector<std::string> l = labels_;
    if (l.empty())
      for (std::size_t j = 0; j < cols_; ++j) l.push_back(std::to_string(j));
    l.push_back(label);
    m.set_labels(std::move(l));
  }
  return m;
}

bool Mat::operator==(const Mat& o) const {
  return field_ && o.field_ && field_->same_as(*o.field_) && rows_ == o.rows_ &&
         cols_ == o.cols_ && data_ == o.data_;
}

std::string Mat::dump() const {
  std::ostringstream out;
  out << rows_ << "x" << cols_ << " over " << (field_ ? field_->describe() : "?") << "\n";
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out << at(i, j) << (j + 1 < cols_ ? " " : "");
    out << "\n";
  }
  return out.str();
}

RrefResult rref(const Mat& a) {
  Mat r = a;
  const Field& f = *a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = pr; i < rows; ++i)
      if (r.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < cols; ++j) {
        const std::uint32_t t = r.at(pr, j);
        r.set(pr, j, r.at(sel, j));
        r.set(sel, j, t);
      }
    const std::uint32_t piv_inv = f.inv(r.at(pr, c));
    for (std::size_t j = 0; j < cols; ++j) r.set(pr, j, f.mul(piv_inv, r.at(pr, j)));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      const std::uint32_t factor = r.at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j)
        r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(pr, j))));
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

std::vector<std::vector<std::uint32_t>> nullspace(const Mat& a) {
  const RrefResult rr = rref(a);
  const Field& f = *a.field();
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<std::uint32_t> v(cols, 0);
    v[free_c] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      v[rr.pivots[i]] = f.neg(rr.reduced.at(i, free_c));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<WeightWitness> min_weight(const std::vector<std::vector<std::uint32_t>>& span_rows,
                                        const FieldPtr& field, EnumBudget budget) {
  if (!field) throw std::invalid_argument("min_weight needs a field");
  if (span_rows.empty()) return std::nullopt;
  const std::size_t n = span_rows[0].size();
  for (const auto& r : span_rows)
    if (r.size() != n) throw std::invalid_argument("ragged span rows");

  // reduce to an independent basis first so the walk length is q^rank
  const RrefResult rr = rref(Mat::from_rows(field, span_rows));
  const std::size_t k = rr.pivots.size();
  if (k == 0) return std::nullopt;

  const Field& f = *field;
  const std::uint64_t q = f.q();
  const double candidates = std::pow(static_cast<double>(q), static_cast<double>(k));
  if (candidates > 9.2e18 || candidates > static_cast<double>(budget.max_candidates))
    throw BudgetExceeded("span enumeration over " + std::to_string(k) +
                         " dimensions exceeds the budget");

  std::vector<std::vector<std::uint32_t>> basis(k);
  std::vector<std::vector<std::size_t>> support(k);
  for (std::size_t i = 0; i < k; ++i) {
    basis[i] = rr.reduced.row(i);
    for (std::size_t j = 0; j < n; ++j)
      if (basis[i][j] != 0) support[i].push_back(j);
  }

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= q;

  // reflected base-q Gray walk: digit j of word(i) is n_j - n_{j+1} mod q,
  // so consecutive words differ in exactly one digit
  std::vector<std::uint32_t> gray(k, 0);
  std::vector<std::uint32_t> current(n, 0);
  unsigned weight = 0;
  std::optional<WeightWitness> best;

  std::vector<std::uint32_t> digits(k + 1, 0);
  for (std::uint64_t i = 1; i < total; ++i) {
    std::uint64_t t = i;
    for (std::size_t j = 0; j < k; ++j) {
      digits[j] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    digits[k] = 0;
    std::size_t changed = k;
    std::uint32_t new_d = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint32_t d = static_cast<std::uint32_t>((digits[j] + q - digits[j + 1]) % q);
      if (d != gray[j]) {
        changed = j;
        new_d = d;
        break;  // exactly one digit changes per step
      }
    }
    if (changed == k) continue;  // defensive; cannot happen
    const std::uint32_t delta = f.sub(new_d, gray[changed]);
    gray[changed] = new_d;
    for (std::size_t j : support[changed]) {
      const std::uint32_t before = current[j];
      const std::uint32_t after = f.add(before, f.mul(delta, basis[changed][j]));
      current[j] = after;
      if (before != 0 && after == 0) --weight;
      if (before == 0 && after != 0) ++weight;
    }
    if (!best || weight < best->weight) {
      best = WeightWitness{weight, current};
      if (weight == 1) break;
    }
  }
  return best;
}

}  // namespace matcode
