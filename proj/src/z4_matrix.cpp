#include "z2z4/z4_matrix.hpp"

#include <utility>

#include "z2z4/error.hpp"

namespace z2z4::z4 {

Matrix::Matrix(const std::vector<Row>& rows, std::size_t cols) : Matrix(rows.size(), cols) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw LengthMismatch("matrix rows of unequal length");
    for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = rows[i][j] & 3u;
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Row Matrix::row(std::size_t i) const { return Row(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Row Matrix::col(std::size_t j) const {
  Row c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

namespace {

constexpr bool is_unit(std::uint8_t v) { return v & 1u; }

struct Reducer {
  Matrix a;
  Matrix c;
  Matrix cinv;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
    for (std::size_t k = 0; k < c.rows(); ++k) std::swap(c(k, i), c(k, j));
    for (std::size_t k = 0; k < cinv.cols(); ++k) std::swap(cinv(i, k), cinv(j, k));
  }
  // row_i -= m * row_p
  void sub_row(std::size_t i, std::size_t p, unsigned m) {
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = (a(i, k) + 4 * 4 - m * a(p, k)) & 3u;
  }
  // col_j -= m * col_p, tracked in C and C^{-1}
  void sub_col(std::size_t j, std::size_t p, unsigned m) {
    for (std::size_t k = 0; k < a.rows(); ++k) a(k, j) = (a(k, j) + 4 * 4 - m * a(k, p)) & 3u;
    for (std::size_t k = 0; k < c.rows(); ++k) c(k, j) = (c(k, j) + 4 * 4 - m * c(k, p)) & 3u;
    // E = I - m e_p e_j^T, E^{-1} = I + m e_p e_j^T: row_p of C^{-1} += m * row_j
    for (std::size_t k = 0; k < cinv.cols(); ++k) cinv(p, k) = (cinv(p, k) + m * cinv(j, k)) & 3u;
  }
  void scale_row(std::size_t i, unsigned u) {
    for (std::size_t k = 0; k < a.cols(); ++k) a(i, k) = (a(i, k) * u) & 3u;
  }
};

}  // namespace

SmithForm smith_form(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Reducer r{std::move(m), Matrix::identity(cols), Matrix::identity(cols)};
  SmithForm out;
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    std::size_t pi = rows, pj = cols;
    bool unit = false;
    for (std::size_t i = t; i < rows && !unit; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const auto v = r.a(i, j);
        if (is_unit(v)) {
          pi = i, pj = j, unit = true;
          break;
        }
        if (v == 2 && pi == rows) pi = i, pj = j;
      }
    if (pi == rows) break;
    r.swap_rows(t, pi);
    r.swap_cols(t, pj);
    if (unit) {
      r.scale_row(t, r.a(t, t));  // units are self-inverse mod 4
      for (std::size_t i = 0; i < rows; ++i)
        if (i != t && r.a(i, t)) r.sub_row(i, t, r.a(i, t));
      for (std::size_t j = t + 1; j < cols; ++j)
        if (r.a(t, j)) r.sub_col(j, t, r.a(t, j));
      out.pivots.push_back(1);
    } else {
      for (std::size_t i = 0; i < rows; ++i)
        if (i != t && r.a(i, t) == 2) r.sub_row(i, t, 1);
      for (std::size_t j = t + 1; j < cols; ++j)
        if (r.a(t, j) == 2) r.sub_col(j, t, 1);
      out.pivots.push_back(2);
    }
  }
  out.col_ops = std::move(r.c);
  out.col_ops_inv = std::move(r.cinv);
  return out;
}

std::vector<Row> kernel(const Matrix& m) {
  const SmithForm s = smith_form(m);
  std::vector<Row> gens;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    Row g = s.col_ops.col(i);
    if (i < s.pivots.size()) {
      if (s.pivots[i] == 1) continue;
      for (auto& v : g) v = (2 * v) & 3u;
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<std::pair<Row, unsigned>> row_basis(const Matrix& g) {
  const SmithForm s = smith_form(g);
  std::vector<std::pair<Row, unsigned>> basis;
  for (std::size_t i = 0; i < s.pivots.size(); ++i) {
    Row b = s.col_ops_inv.row(i);
    if (s.pivots[i] == 2) {
      for (auto& v : b) v = (2 * v) & 3u;
      basis.emplace_back(std::move(b), 2u);
    } else {
      basis.emplace_back(std::move(b), 4u);
    }
  }
  return basis;
}

}  // namespace z2z4::z4
