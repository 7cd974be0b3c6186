#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matcode/budget.hpp"
#include "matcode/field.hpp"
#include "matcode/rng.hpp"

namespace matcode {

// Dense row-major matrix over a finite field; entries are packed element
// values. Column labels, when set, carry matroid element ids through
// serialization and minors.
class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr f, std::size_t rows, std::size_t cols);

  static Mat identity(FieldPtr f, std::size_t n);
  static Mat from_rows(FieldPtr f, const std::vector<std::vector<std::uint32_t>>& rows);
  static Mat random(FieldPtr f, std::size_t rows, std::size_t cols, Rng& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v);

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  bool has_labels() const { return !labels_.empty(); }

  std::vector<std::uint32_t> row(std::size_t r) const;
  std::vector<std::uint32_t> col(std::size_t c) const;

  Mat transposed() const;
  Mat times(const Mat& o) const;
  // Coefficients per row, result is the combined row vector coef^T * A.
  std::vector<std::uint32_t> combine_rows(const std::vector<std::uint32_t>& coef) const;
  // A * x for a column vector x.
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& x) const;

  Mat col_subset(const std::vector<std::size_t>& idx) const;  // keeps label slices
  Mat with_row_appended(const std::vector<std::uint32_t>& row) const;
  Mat with_col_appended(const std::vector<std::uint32_t>& col, const std::string& label) const;

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  std::string dump() const;  // compact text form for diagnostics

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
  std::vector<std::string> labels_;
};

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Deterministic reduced row echelon form: leftmost pivot, rows scanned top
// to bottom. Zero rows are kept at the bottom of `reduced`.
RrefResult rref(const Mat& a);
std::size_t rank(const Mat& a);

// Basis of the right kernel {x : A x = 0}, one vector per free column,
// free columns ascending. Entries are packed element values.
std::vector<std::vector<std::uint32_t>> nullspace(const Mat& a);

struct WeightWitness {
  unsigned weight;
  std::vector<std::uint32_t> vec;
};

// Exact minimum Hamming weight over the nonzero vectors of span(rows).
// nullopt when the span is zero. Enumerates the span in reflected-Gray
// order with incremental updates and stops early at weight 1; throws
// BudgetExceeded when q^dim exceeds the budget.
std::optional<WeightWitness> min_weight(const std::vector<std::vector<std::uint32_t>>& span_rows,
                                        const FieldPtr& field, EnumBudget budget = {});

}  // namespace matcode
