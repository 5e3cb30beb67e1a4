#pragma once

// Exact integer matrices and their Smith normal form.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "cartan/integer.hpp"

namespace cartan {

/// Dense row-major integer matrix. Shapes 0×n and n×0 are valid.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Builds from nested rows; all rows must have equal length.
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const IntegerMatrix&) const = default;

  // Elementary operations used by the reductions.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);
  /// Replaces rows (a, b) by (x·a + y·b, z·a + w·b).
  void combine_rows(std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                    const Integer& z, const Integer& w);
  /// Replaces columns (a, b) by (x·a + y·b, z·a + w·b).
  void combine_cols(std::size_t a, std::size_t b, const Integer& x, const Integer& y,
                    const Integer& z, const Integer& w);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination; square input only.
Integer determinant(const IntegerMatrix& m);

struct SmithForm {
  /// Same shape as the input; diagonal with d_1 | d_2 | ... and zeros last.
  IntegerMatrix diagonal;
  /// The nonzero diagonal entries, in order (length = rank).
  std::vector<Integer> invariant_factors;
  /// Number of zero diagonal entries, min(rows, cols) - rank.
  std::size_t zero_count = 0;
  /// Unimodular U, V with U·M·V = diagonal, when requested.
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;

  std::size_t rank() const { return invariant_factors.size(); }
};

/// Smith normal form by minimal-pivot elimination with gcd reduction. Entries
/// are arbitrary precision, so coefficient growth is absorbed rather than
/// controlled; a modular algorithm would be the next step for large inputs.
SmithForm smith_normal_form(IntegerMatrix m, bool with_transforms = false);

/// Rank over Q.
std::size_t rank(const IntegerMatrix& m);

}  // namespace cartan
