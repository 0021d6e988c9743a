#include "cartier/gflinalg.hpp"

#include "cartier/poly.hpp"

namespace cartier {

std::size_t rref(GFMatrix& m) {
  const std::uint32_t p = m.p;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < m.cols; ++c)
        std::swap(m.at(sel, c), m.at(pivot_row, c));
    std::uint32_t inv = mod_inv(m.at(pivot_row, col), p);
    for (std::size_t c = col; c < m.cols; ++c)
      m.at(pivot_row, c) = mod_mul(m.at(pivot_row, c), inv, p);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == pivot_row || m.at(r, col) == 0) continue;
      std::uint32_t f = m.at(r, col);
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = mod_sub(m.at(r, c), mod_mul(f, m.at(pivot_row, c), p), p);
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::vector<std::vector<std::uint32_t>> kernel_basis(const GFMatrix& m) {
  GFMatrix r = m;
  std::size_t rank = rref(r);
  std::vector<std::size_t> pivot_col(rank);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t row = 0, col = 0; row < rank; ++row) {
    while (col < m.cols && r.at(row, col) == 0) ++col;
    pivot_col[row] = col;
    is_pivot[col] = true;
  }
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(m.cols, 0);
    v[free] = 1;
    for (std::size_t row = 0; row < rank; ++row)
      v[pivot_col[row]] = (r.at(row, free) == 0) ? 0 : m.p - r.at(row, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<std::uint32_t>> solve(
    const GFMatrix& m, const std::vector<std::uint32_t>& b) {
  GFMatrix aug = GFMatrix::make(m.p, m.rows, m.cols + 1);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r] % m.p;
  }
  std::size_t rank = rref(aug);
  std::vector<std::uint32_t> x(m.cols, 0);
  for (std::size_t row = 0, col = 0; row < rank; ++row) {
    while (col <= m.cols && aug.at(row, col) == 0) ++col;
    if (col == m.cols) return std::nullopt;  // 0 = nonzero row
    x[col] = aug.at(row, m.cols);
  }
  return x;
}

}  // namespace cartier
