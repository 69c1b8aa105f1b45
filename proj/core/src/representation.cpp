#include "mdlie/representation.hpp"

#include <utility>

#include "mdlie/error.hpp"

namespace mdlie {

Representation::Representation(std::size_t algebra_dim, std::size_t module_dim, Matrix d_M, Scalar lambda)
    : n_(algebra_dim),
      m_(module_dim),
      rho_(pair_count(algebra_dim), Matrix(module_dim, module_dim)),
      d_M_(std::move(d_M)),
      lambda_(std::move(lambda)) {
  if (d_M_.rows() != m_ || d_M_.cols() != m_) throw InputError("module operator must be module_dim x module_dim");
}

Matrix Representation::action(std::size_t i, std::size_t j) const {
  const SignedPair p = locate_pair(n_, i, j);
  if (p.sign == 0) return Matrix(m_, m_);
  return p.sign > 0 ? rho_[p.position] : -rho_[p.position];
}

Matrix Representation::action(const Vector& x, const Vector& y) const {
  const Vector w = wedge(x, y);
  Matrix out(m_, m_);
  for (std::size_t p = 0; p < w.size(); ++p)
    if (sgn(w[p]) != 0) out += w[p] * rho_[p];
  return out;
}

void Representation::set_action(std::size_t i, std::size_t j, const Matrix& value) {
  if (value.rows() != m_ || value.cols() != m_) throw InputError("action matrix has wrong shape");
  const SignedPair p = locate_pair(n_, i, j);
  if (p.sign == 0) throw InputError("action on a repeated pair is always zero");
  rho_[p.position] = p.sign > 0 ? value : -value;
}

void Representation::set_d_M(Matrix d_M) {
  if (d_M.rows() != m_ || d_M.cols() != m_) throw InputError("module operator has wrong shape");
  d_M_ = std::move(d_M);
}

namespace {
Vector flatten(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }
}  // namespace

VerificationReport verify_representation(const MD3LieAlgebra& md, const Representation& rep) {
  if (rep.algebra_dim() != md.dim()) throw InputError("representation is over an algebra of another dimension");
  if (rep.lambda() != md.lambda()) throw InputError("representation weight differs from the algebra's");
  const std::size_t n = md.dim(), m = rep.module_dim();
  const auto& a = md.algebra();
  VerificationReport report;

  std::vector<Matrix> act(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) act[i * n + j] = rep.action(i, j);
  auto rho = [&](std::size_t i, std::size_t j) -> const Matrix& { return act[i * n + j]; };
  auto rho_v = [&](const Vector& x, std::size_t j) { return rep.action(x, unit_vector(n, j)); };

  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t a3 = 0; a3 < n; ++a3)
        for (std::size_t a4 = 0; a4 < n; ++a4) {
          const Matrix br_lhs = rho_v(a.basis_bracket(a1, a2, a3), a4);
          const Matrix br_rhs = rho(a2, a3) * rho(a1, a4) + rho(a3, a1) * rho(a2, a4) + rho(a1, a2) * rho(a3, a4);
          report.check(kRepBracketLaw, {a1, a2, a3, a4}, flatten(br_lhs), flatten(br_rhs));

          const Matrix cm_lhs = rho(a1, a2) * rho(a3, a4);
          const Matrix cm_rhs = rho(a3, a4) * rho(a1, a2) + br_lhs -
                                rho_v(a.basis_bracket(a1, a2, a4), a3);
          report.check(kRepCommutatorLaw, {a1, a2, a3, a4}, flatten(cm_lhs), flatten(cm_rhs));
        }

  const Matrix& d = md.d();
  const Matrix& dM = rep.d_M();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix lhs = dM * rho(i, j);
      Matrix rhs = rho_v(d.column(i), j) - rho_v(d.column(j), i) + rho(i, j) * dM + md.lambda() * rho(i, j);
      for (std::size_t r = 0; r < m; ++r)
        report.check(kRepDifferentialLaw, {i, j, r}, lhs.column(r), rhs.column(r));
    }
  return report;
}

Representation adjoint_representation(const MD3LieAlgebra& md) {
  const std::size_t n = md.dim();
  Representation rep(n, n, md.d(), md.lambda());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rep.set_action(i, j, md.algebra().left_multiplication(i, j));
  return rep;
}

Representation dual_representation(const Representation& rep) {
  const std::size_t n = rep.algebra_dim();
  Representation out(n, rep.module_dim(), -rep.d_M().transpose(), rep.lambda());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.set_action(i, j, -rep.action(i, j).transpose());
  return out;
}

Representation trivial_representation(const MD3LieAlgebra& md, const Matrix& d_M) {
  return Representation(md.dim(), d_M.rows(), d_M, md.lambda());
}

MD3LieAlgebra semidirect_product(const MD3LieAlgebra& md, const Representation& rep) {
  if (rep.algebra_dim() != md.dim()) throw InputError("representation is over an algebra of another dimension");
  const std::size_t n = md.dim(), m = rep.module_dim(), total = n + m;
  SkewTernaryTensor br(total, total);
  for (std::size_t t = 0; t < br.triple_count(); ++t) {
    const auto& [i, j, k] = br.triple(t);
    Vector v = zero_vector(total);
    if (k < n) {
      const Vector inner = md.algebra().basis_bracket(i, j, k);
      std::copy(inner.begin(), inner.end(), v.begin());
    } else if (j < n) {
      // Canonical order puts algebra indices first: (e_i, e_j, u) -> ρ(e_i, e_j)u.
      const Vector u = rep.action(i, j).column(k - n);
      std::copy(u.begin(), u.end(), v.begin() + static_cast<std::ptrdiff_t>(n));
    }
    br.set_canonical(t, std::move(v));
  }
  return MD3LieAlgebra(ThreeLieAlgebra(std::move(br)), direct_sum(md.d(), rep.d_M()), md.lambda());
}

}  // namespace mdlie
