#include "mdlie/linalg.hpp"

#include "mdlie/error.hpp"

namespace mdlie {

namespace {

std::vector<mpz_class> integer_rows(const Matrix& m) {
  std::vector<mpz_class> out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& x = m(r, c);
      out[r * m.cols() + c] = x.get_num() * (l / x.get_den());
    }
  }
  return out;
}

// Back substitution on the first `ncols` columns of an echelon form. Entries of
// `x` at free columns are kept; pivot entries are overwritten. `rhs_col`
// selects the right-hand side column; without one the system is homogeneous.
Vector back_substitute(const RowEchelon& e, std::size_t ncols, Vector x, std::optional<std::size_t> rhs_col) {
  for (std::size_t r = e.rank(); r-- > 0;) {
    const std::size_t p = e.pivots[r];
    Scalar acc = rhs_col ? Scalar(e.at(r, *rhs_col)) : Scalar(0);
    for (std::size_t j = p + 1; j < ncols; ++j) {
      const mpz_class& u = e.at(r, j);
      if (u != 0 && sgn(x[j]) != 0) acc -= Scalar(u) * x[j];
    }
    x[p] = acc / Scalar(e.at(r, p));
  }
  return x;
}

}  // namespace

RowEchelon fraction_free_echelon(const Matrix& m) {
  RowEchelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.entries = integer_rows(m);
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return e.entries[r * e.cols + c]; };

  mpz_class prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < e.cols && row < e.rows; ++col) {
    std::size_t p = row;
    while (p < e.rows && at(p, col) == 0) ++p;
    if (p == e.rows) continue;
    if (p != row) {
      for (std::size_t j = 0; j < e.cols; ++j) std::swap(at(p, j), at(row, j));
    }
    const mpz_class pivot = at(row, col);
    for (std::size_t i = row + 1; i < e.rows; ++i) {
      const mpz_class factor = at(i, col);
      for (std::size_t j = col + 1; j < e.cols; ++j) {
        mpz_class& target = at(i, j);
        target = pivot * target - factor * at(row, j);
        // Bareiss: the previous pivot divides exactly.
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = pivot;
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return fraction_free_echelon(m).rank(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const RowEchelon e = fraction_free_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(m.cols());
    x[f] = 1;
    basis.push_back(primitive(back_substitute(e, m.cols(), std::move(x), std::nullopt)));
  }
  return basis;
}

std::optional<Vector> solve_in_image(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InputError("solve_in_image: right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug(r, m.cols()) = b[r];
  const RowEchelon e = fraction_free_echelon(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  return back_substitute(e, m.cols(), Vector(m.cols()), m.cols());
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Matrix{};
  const RowEchelon e = fraction_free_echelon(hstack(m, Matrix::identity(n)));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vector x = back_substitute(e, n, Vector(n), n + c);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = x[r];
  }
  return inv;
}

}  // namespace mdlie
