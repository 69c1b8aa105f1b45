#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mdlie/matrix.hpp"

namespace mdlie {

/// Integer row-echelon form produced by fraction-free (Bareiss) elimination.
/// Each input row is first scaled by the lcm of its denominators; row scaling
/// preserves row space and kernel, so the result describes the input exactly.
struct RowEchelon {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> entries;     // row-major, rows x cols
  std::vector<std::size_t> pivots;    // pivot column of echelon row r

  const mpz_class& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  std::size_t rank() const noexcept { return pivots.size(); }
};

RowEchelon fraction_free_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the right null space {v : m v = 0}, one vector per free column,
/// each scaled to coprime integer entries.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when b is outside the column space.
/// Free variables are set to zero. Throws InputError if b has the wrong length.
std::optional<Vector> solve_in_image(const Matrix& m, const Vector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace mdlie
