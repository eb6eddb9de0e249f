#pragma once

// Dense matrices over Z4 and their Smith normal form. Z4 is a local principal
// ideal ring, so every matrix reduces to diag(1,..,1,2,..,2,0,..) under
// invertible row and column operations.

#include <cstdint>
#include <utility>
#include <vector>

namespace z2z4::z4 {

using Row = std::vector<std::uint8_t>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  explicit Matrix(const std::vector<Row>& rows, std::size_t cols);

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint8_t& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }

  Row row(std::size_t i) const;
  Row col(std::size_t j) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> a_;
};

/// R * M * C = diag(d_0, d_1, ...) with d_i in {1, 2} for i < pivots.size().
struct SmithForm {
  std::vector<std::uint8_t> pivots;
  Matrix col_ops;      // C
  Matrix col_ops_inv;  // C^{-1}
};

SmithForm smith_form(Matrix m);

/// Generators of {x in Z4^cols : M x = 0}.
std::vector<Row> kernel(const Matrix& m);

/// A direct-sum basis of the row space: every element is uniquely
/// sum(c_i * b_i) with 0 <= c_i < order_i.
std::vector<std::pair<Row, unsigned>> row_basis(const Matrix& g);

}  // namespace z2z4::z4
