#include "mdlie/leibniz.hpp"

#include "mdlie/error.hpp"

namespace mdlie {

Vector LeibnizData::operator()(const Vector& x, const Vector& y) const {
  if (x.size() != dim || y.size() != dim) throw InputError("Leibniz argument has wrong length");
  Vector out = zero_vector(dim);
  for (std::size_t p = 0; p < dim; ++p) {
    if (sgn(x[p]) == 0) continue;
    for (std::size_t q = 0; q < dim; ++q)
      if (sgn(y[q]) != 0) axpy(out, x[p] * y[q], product(p, q));
  }
  return out;
}

LeibnizData fundamental_leibniz(const MD3LieAlgebra& md) {
  const std::size_t n = md.dim();
  const auto pairs = pair_basis(n);
  const auto& a = md.algebra();
  LeibnizData out;
  out.dim = pairs.size();
  out.products.reserve(out.dim * out.dim);
  for (const auto& A : pairs) {
    const Matrix L = a.left_multiplication(A.i, A.j);
    for (const auto& B : pairs) {
      const Vector b1 = unit_vector(n, B.i), b2 = unit_vector(n, B.j);
      out.products.push_back(wedge(L.column(B.i), b2) + wedge(b1, L.column(B.j)));
    }
  }
  std::vector<Vector> cols;
  cols.reserve(out.dim);
  for (const auto& P : pairs) {
    Vector c = wedge(md.d().column(P.i), unit_vector(n, P.j)) + wedge(unit_vector(n, P.i), md.d().column(P.j));
    c[pair_position(n, P.i, P.j)] += md.lambda();
    cols.push_back(std::move(c));
  }
  out.d_F = Matrix::from_columns(out.dim, cols);
  return out;
}

VerificationReport verify_leibniz(const LeibnizData& data) {
  VerificationReport report;
  const std::size_t N = data.dim;
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      const Vector& xy = data.product(x, y);
      for (std::size_t z = 0; z < N; ++z) {
        const Vector lhs = data(unit_vector(N, x), data.product(y, z));
        const Vector rhs = data(xy, unit_vector(N, z)) + data(unit_vector(N, y), data.product(x, z));
        report.check(kLeibnizIdentity, {x, y, z}, lhs, rhs);
      }
      const Vector lhs = data.d_F.apply(xy);
      const Vector rhs = data(data.d_F.column(x), unit_vector(N, y)) + data(unit_vector(N, x), data.d_F.column(y));
      report.check(kLeibnizDerivation, {x, y}, lhs, rhs);
    }
  return report;
}

}  // namespace mdlie
