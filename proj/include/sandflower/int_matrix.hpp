#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sandflower/bigint.hpp"

namespace sandflower {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const BigInt> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<BigInt> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const BigInt> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  IntMatrix transposed() const;
  IntMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  IntMatrix without(std::size_t row, std::size_t col) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  // min(rows, cols) entries: d_1 | d_2 | ... | d_r followed by zeros.
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;
};

// Smith form together with a unimodular column transform V such that
// U * M * V = diag for some unimodular U. Row i of V is the image of the
// i-th standard basis vector in the diagonal coordinates.
struct SmithDecomposition {
  SmithForm form;
  IntMatrix col_transform;
};

SmithForm smith_normal_form(const IntMatrix& m);
SmithDecomposition smith_decompose(const IntMatrix& m);

// For the group Z^cols / rowspace(m) with m decomposed as above: whether the
// row vector x is a relation, and the order of its class (InfiniteGroup if
// unbounded).
bool cokernel_contains(const SmithDecomposition& smith, std::span<const BigInt> x);
BigInt cokernel_order(const SmithDecomposition& smith, std::span<const BigInt> x);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

// gcd of all k x k minors; 0 when all vanish. Enumerates every minor, so
// this is only usable on small matrices.
BigInt determinant_divisor(const IntMatrix& m, std::size_t k);

// Text format: "rows cols" followed by rows*cols integers, whitespace separated.
IntMatrix parse_matrix(std::istream& in);
std::string format_matrix(const IntMatrix& m);

}  // namespace sandflower
