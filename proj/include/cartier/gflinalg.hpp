#ifndef CARTIER_GFLINALG_HPP
#define CARTIER_GFLINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace cartier {

// Dense row-major matrix over F_p. Small sizes only (certificate slices,
// bounded-degree membership solving).
struct GFMatrix {
  std::uint32_t p = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> a;

  static GFMatrix make(std::uint32_t p, std::size_t rows, std::size_t cols) {
    return GFMatrix{p, rows, cols, std::vector<std::uint32_t>(rows * cols, 0)};
  }
  std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// In-place reduced row echelon form; returns the rank.
std::size_t rref(GFMatrix& m);

// Canonical basis (RREF rows) of the kernel {x : M x = 0}.
std::vector<std::vector<std::uint32_t>> kernel_basis(const GFMatrix& m);

// One solution of M x = b, if any.
std::optional<std::vector<std::uint32_t>> solve(const GFMatrix& m,
                                                const std::vector<std::uint32_t>& b);

}  // namespace cartier

#endif
