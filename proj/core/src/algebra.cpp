#include "mdlie/algebra.hpp"

#include <utility>

#include "mdlie/error.hpp"
#include "mdlie/linalg.hpp"

namespace mdlie {

ThreeLieAlgebra::ThreeLieAlgebra(SkewTernaryTensor bracket) : bracket_(std::move(bracket)) {
  if (bracket_.dim_in() != bracket_.dim_out())
    throw InputError("3-Lie bracket must take values in the algebra itself");
}

ThreeLieAlgebra ThreeLieAlgebra::abelian(std::size_t n) { return ThreeLieAlgebra(SkewTernaryTensor(n, n)); }

Matrix ThreeLieAlgebra::left_multiplication(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  std::vector<Vector> cols;
  cols.reserve(n);
  for (std::size_t k = 0; k < n; ++k) cols.push_back(bracket_(x, y, unit_vector(n, k)));
  return Matrix::from_columns(n, cols);
}

Matrix ThreeLieAlgebra::left_multiplication(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  std::vector<Vector> cols;
  cols.reserve(n);
  for (std::size_t k = 0; k < n; ++k) cols.push_back(bracket_.basis_value(i, j, k));
  return Matrix::from_columns(n, cols);
}

MD3LieAlgebra::MD3LieAlgebra(ThreeLieAlgebra algebra, Matrix d, Scalar lambda)
    : algebra_(std::move(algebra)), diff_{std::move(d), std::move(lambda)} {
  if (diff_.d.rows() != algebra_.dim() || diff_.d.cols() != algebra_.dim())
    throw InputError("differential must be a dim x dim matrix");
}

VerificationReport verify_3lie(const ThreeLieAlgebra& a) {
  VerificationReport report;
  const std::size_t n = a.dim();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));

  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = a1 + 1; a2 < n; ++a2) {
      const Matrix L = a.left_multiplication(a1, a2);
      for (std::size_t a3 = 0; a3 < n; ++a3)
        for (std::size_t a4 = a3 + 1; a4 < n; ++a4)
          for (std::size_t a5 = 0; a5 < n; ++a5) {
            const Vector lhs = L.apply(a.basis_bracket(a3, a4, a5));
            Vector rhs = a(L.column(a3), basis[a4], basis[a5]);
            rhs += a(basis[a3], L.column(a4), basis[a5]);
            rhs += a(basis[a3], basis[a4], L.column(a5));
            report.check(kFundamentalIdentity, {a1, a2, a3, a4, a5}, lhs, rhs);
          }
    }
  return report;
}

VerificationReport verify_modified_differential(const MD3LieAlgebra& md) {
  VerificationReport report;
  const auto& a = md.algebra();
  const Matrix& d = md.d();
  const std::size_t n = md.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        const Vector br = a.basis_bracket(i, j, k);
        const Vector lhs = d.apply(br);
        Vector rhs = a(d.column(i), ej, ek);
        rhs += a(ei, d.column(j), ek);
        rhs += a(ei, ej, d.column(k));
        axpy(rhs, md.lambda(), br);
        report.check(kModifiedDifferentialLaw, {i, j, k}, lhs, rhs);
      }
  return report;
}

bool is_derivation(const ThreeLieAlgebra& a, const Matrix& D) {
  const std::size_t n = a.dim();
  if (D.rows() != n || D.cols() != n) throw InputError("derivation candidate has wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        Vector rhs = a(D.column(i), ej, ek);
        rhs += a(ei, D.column(j), ek);
        rhs += a(ei, ej, D.column(k));
        if (D.apply(a.basis_bracket(i, j, k)) != rhs) return false;
      }
  return true;
}

bool derivation_shift_check(const MD3LieAlgebra& md) {
  const Matrix shifted = md.d() + Scalar(md.lambda() / 2) * Matrix::identity(md.dim());
  return is_derivation(md.algebra(), shifted);
}

VerificationReport homomorphism_report(const Matrix& eta, const MD3LieAlgebra& src, const MD3LieAlgebra& dst) {
  const std::size_t n = src.dim(), m = dst.dim();
  if (eta.rows() != m || eta.cols() != n) throw InputError("homomorphism has wrong shape");
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        report.check(kBracketHomomorphism, {i, j, k}, eta.apply(src.algebra().basis_bracket(i, j, k)),
                     dst.algebra()(eta.column(i), eta.column(j), eta.column(k)));
  const Matrix left = eta * src.d();
  const Matrix right = dst.d() * eta;
  for (std::size_t j = 0; j < n; ++j)
    report.check(kDifferentialIntertwining, {j}, left.column(j), right.column(j));
  return report;
}

bool homomorphism_check(const Matrix& eta, const MD3LieAlgebra& src, const MD3LieAlgebra& dst) {
  return homomorphism_report(eta, src, dst).valid();
}

bool is_isomorphism(const Matrix& eta, const MD3LieAlgebra& src, const MD3LieAlgebra& dst) {
  return eta.is_square() && homomorphism_check(eta, src, dst) && inverse(eta).has_value();
}

}  // namespace mdlie
