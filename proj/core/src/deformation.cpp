#include "mdlie/deformation.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "mdlie/error.hpp"
#include "mdlie/linalg.hpp"

namespace mdlie {

LinearDeformation LinearDeformation::zero(const MD3LieAlgebra& base) {
  const std::size_t n = base.dim();
  return {base, SkewTernaryTensor(n, n), SkewTernaryTensor(n, n), Matrix(n, n)};
}

std::string deformation_fi_law(int order) { return "deformation_fi_t" + std::to_string(order); }
std::string deformation_diff_law(int order) { return "deformation_diff_t" + std::to_string(order); }
std::string equivalence_diff_law(int order) { return "equivalence_diff_t" + std::to_string(order); }
std::string equivalence_bracket_law(int order) { return "equivalence_bracket_t" + std::to_string(order); }

namespace {

void require_shape(const LinearDeformation& ld) {
  const std::size_t n = ld.base.dim();
  auto ok = [n](const SkewTernaryTensor& t) { return t.dim_in() == n && t.dim_out() == n; };
  if (!ok(ld.nu1) || !ok(ld.nu2) || ld.d1.rows() != n || ld.d1.cols() != n)
    throw InputError("deformation components do not match the base dimension");
}

std::array<const SkewTernaryTensor*, 3> brackets(const LinearDeformation& ld) {
  return {&ld.base.algebra().bracket(), &ld.nu1, &ld.nu2};
}

}  // namespace

VerificationReport verify_linear_deformation(const LinearDeformation& ld) {
  require_shape(ld);
  const std::size_t n = ld.base.dim();
  const auto nu = brackets(ld);
  const std::array<const Matrix*, 2> d = {&ld.base.d(), &ld.d1};
  VerificationReport report;
  auto e = [n](std::size_t i) { return unit_vector(n, i); };

  for (int order = 0; order <= 4; ++order) {
    const std::string law = deformation_fi_law(order);
    for (std::size_t a1 = 0; a1 < n; ++a1)
      for (std::size_t a2 = a1 + 1; a2 < n; ++a2)
        for (std::size_t a3 = 0; a3 < n; ++a3)
          for (std::size_t a4 = a3 + 1; a4 < n; ++a4)
            for (std::size_t a5 = 0; a5 < n; ++a5) {
              Vector lhs = zero_vector(n), rhs = zero_vector(n);
              for (int i = 0; i <= 2; ++i) {
                const int j = order - i;
                if (j < 0 || j > 2) continue;
                const auto& outer = *nu[static_cast<std::size_t>(i)];
                const auto& inner = *nu[static_cast<std::size_t>(j)];
                lhs += outer(e(a1), e(a2), inner.basis_value(a3, a4, a5));
                rhs += outer(inner.basis_value(a1, a2, a3), e(a4), e(a5));
                rhs += outer(e(a3), inner.basis_value(a1, a2, a4), e(a5));
                rhs += outer(e(a3), e(a4), inner.basis_value(a1, a2, a5));
              }
              report.check(law, {a1, a2, a3, a4, a5}, lhs, rhs);
            }
  }

  for (int order = 0; order <= 3; ++order) {
    const std::string law = deformation_diff_law(order);
    for (std::size_t a1 = 0; a1 < n; ++a1)
      for (std::size_t a2 = a1 + 1; a2 < n; ++a2)
        for (std::size_t a3 = a2 + 1; a3 < n; ++a3) {
          Vector lhs = zero_vector(n), rhs = zero_vector(n);
          for (int l = 0; l <= 1; ++l) {
            const int i = order - l;
            if (i < 0 || i > 2) continue;
            const auto& v = *nu[static_cast<std::size_t>(i)];
            const Matrix& dl = *d[static_cast<std::size_t>(l)];
            lhs += dl.apply(v.basis_value(a1, a2, a3));
            rhs += v(dl.column(a1), e(a2), e(a3));
            rhs += v(e(a1), dl.column(a2), e(a3));
            rhs += v(e(a1), e(a2), dl.column(a3));
          }
          if (order <= 2) axpy(rhs, ld.base.lambda(), nu[static_cast<std::size_t>(order)]->basis_value(a1, a2, a3));
          report.check(law, {a1, a2, a3}, lhs, rhs);
        }
  }
  return report;
}

TotalCochain infinitesimal(const LinearDeformation& ld) {
  require_shape(ld);
  return {2, embed_skew_trilinear(ld.nu1), Cochain::from_linear_map(ld.d1)};
}

VerificationReport equivalence_report(const LinearDeformation& ld, const LinearDeformation& ldp, const Matrix& N) {
  require_shape(ld);
  require_shape(ldp);
  const std::size_t n = ld.base.dim();
  if (ldp.base.dim() != n || N.rows() != n || N.cols() != n)
    throw InputError("equivalence data have mismatched dimensions");
  const auto nu = brackets(ld);
  const auto nup = brackets(ldp);
  const Matrix I = Matrix::identity(n);
  VerificationReport report;

  // N_t d_t = d'_t N_t, coefficient by coefficient.
  const std::array<Matrix, 3> lhs_d = {ld.base.d(), N * ld.base.d() + ld.d1, N * ld.d1};
  const std::array<Matrix, 3> rhs_d = {ldp.base.d(), ldp.base.d() * N + ldp.d1, ldp.d1 * N};
  for (std::size_t order = 0; order < 3; ++order) {
    const std::string law = equivalence_diff_law(static_cast<int>(order));
    for (std::size_t c = 0; c < n; ++c) report.check(law, {c}, lhs_d[order].column(c), rhs_d[order].column(c));
  }

  // N_t ν_t(a,b,c) = ν'_t(N_t a, N_t b, N_t c). Each argument contributes
  // either itself (t^0) or its image under N (t^1).
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = a1 + 1; a2 < n; ++a2)
      for (std::size_t a3 = a2 + 1; a3 < n; ++a3) {
        const std::array<std::size_t, 3> args = {a1, a2, a3};
        std::array<Vector, 6> lhs, rhs;
        lhs.fill(zero_vector(n));
        rhs.fill(zero_vector(n));
        for (std::size_t q = 0; q < 3; ++q) {
          const Vector v = nu[q]->basis_value(a1, a2, a3);
          lhs[q] += v;
          lhs[q + 1] += N.apply(v);
          for (unsigned mask = 0; mask < 8; ++mask) {
            std::array<Vector, 3> x;
            for (std::size_t s = 0; s < 3; ++s) x[s] = ((mask >> s) & 1U) ? N.column(args[s]) : I.column(args[s]);
            rhs[q + static_cast<std::size_t>(std::popcount(mask))] += (*nup[q])(x[0], x[1], x[2]);
          }
        }
        for (std::size_t order = 0; order < 6; ++order)
          report.check(equivalence_bracket_law(static_cast<int>(order)), {a1, a2, a3}, lhs[order], rhs[order]);
      }
  return report;
}

bool check_equivalence(const LinearDeformation& ld, const LinearDeformation& ldp, const Matrix& N) {
  return equivalence_report(ld, ldp, N).valid();
}

namespace {

struct NijenhuisTerms {
  Vector plain;    // [a,b,c]
  Vector singles;  // [Na,b,c] + [a,Nb,c] + [a,b,Nc]
  Vector pairs;    // [a,Nb,Nc] + [Na,b,Nc] + [Na,Nb,c]
  Vector triple;   // [Na,Nb,Nc]
};

NijenhuisTerms nijenhuis_terms(const ThreeLieAlgebra& a, const Matrix& N, std::size_t i, std::size_t j,
                               std::size_t k) {
  const std::size_t n = a.dim();
  const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
  const Vector ni = N.column(i), nj = N.column(j), nk = N.column(k);
  NijenhuisTerms t;
  t.plain = a.basis_bracket(i, j, k);
  t.singles = a(ni, ej, ek) + a(ei, nj, ek) + a(ei, ej, nk);
  t.pairs = a(ei, nj, nk) + a(ni, ej, nk) + a(ni, nj, ek);
  t.triple = a(ni, nj, nk);
  return t;
}

void require_square(const MD3LieAlgebra& md, const Matrix& N) {
  if (N.rows() != md.dim() || N.cols() != md.dim()) throw InputError("operator must be dim x dim");
}

}  // namespace

VerificationReport is_nijenhuis(const MD3LieAlgebra& md, const Matrix& N) {
  require_square(md, N);
  const std::size_t n = md.dim();
  VerificationReport report;
  const Matrix left = N * md.d(), right = md.d() * N;
  for (std::size_t c = 0; c < n; ++c) report.check(kNijenhuisCommutes, {c}, left.column(c), right.column(c));
  const Matrix N2 = N * N, N3 = N2 * N;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto t = nijenhuis_terms(md.algebra(), N, i, j, k);
        const Vector rhs = N.apply(t.pairs) - N2.apply(t.singles) + N3.apply(t.plain);
        report.check(kNijenhuisBracket, {i, j, k}, t.triple, rhs);
      }
  return report;
}

MD3LieAlgebra nijenhuis_deformed_algebra(const MD3LieAlgebra& md, const Matrix& N) {
  if (!is_nijenhuis(md, N).valid()) throw InputError("operator is not a Nijenhuis operator");
  const Matrix N2 = N * N;
  const std::size_t n = md.dim();
  auto bracket = SkewTernaryTensor::from_canonical(n, n, [&](std::size_t i, std::size_t j, std::size_t k) {
    const auto t = nijenhuis_terms(md.algebra(), N, i, j, k);
    return t.pairs - N.apply(t.singles) + N2.apply(t.plain);
  });
  return MD3LieAlgebra(ThreeLieAlgebra(std::move(bracket)), md.d(), md.lambda());
}

LinearDeformation trivial_deformation_from_nijenhuis(const MD3LieAlgebra& md, const Matrix& N) {
  if (!is_nijenhuis(md, N).valid()) throw InputError("operator is not a Nijenhuis operator");
  LinearDeformation ld = LinearDeformation::zero(md);
  for (std::size_t s = 0; s < ld.nu1.triple_count(); ++s) {
    const auto& [i, j, k] = ld.nu1.triple(s);
    const auto t = nijenhuis_terms(md.algebra(), N, i, j, k);
    Vector nu1 = t.singles - N.apply(t.plain);
    Vector nu2 = t.pairs - N.apply(nu1);
    // The t^3 coefficient of N_t ν_t = [N_t -, N_t -, N_t -] must follow from the Nijenhuis law.
    if (N.apply(nu2) != t.triple) throw std::logic_error("Nijenhuis operator violates N ν2 = [N-, N-, N-]");
    ld.nu1.set_canonical(s, std::move(nu1));
    ld.nu2.set_canonical(s, std::move(nu2));
  }
  return ld;
}

VerificationReport is_o_operator(const MD3LieAlgebra& md, const Representation& rep, const Matrix& R) {
  const std::size_t n = md.dim(), m = rep.module_dim();
  if (rep.algebra_dim() != n) throw InputError("representation is over an algebra of another dimension");
  if (R.rows() != n || R.cols() != m) throw InputError("O-operator must map the module into the algebra");
  VerificationReport report;
  const Matrix left = R * rep.d_M(), right = md.d() * R;
  for (std::size_t c = 0; c < m; ++c) report.check(kOOperatorIntertwining, {c}, left.column(c), right.column(c));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        const Vector ri = R.column(i), rj = R.column(j), rk = R.column(k);
        const Vector lhs = md.algebra()(ri, rj, rk);
        Vector inner = rep.action(ri, rj).column(k);
        inner += rep.action(rj, rk).column(i);
        inner += rep.action(rk, ri).column(j);
        report.check(kOOperatorBracket, {i, j, k}, lhs, R.apply(inner));
      }
  return report;
}

Matrix o_operator_lift(const MD3LieAlgebra& md, const Representation& rep, const Matrix& R) {
  const std::size_t n = md.dim(), m = rep.module_dim();
  if (R.rows() != n || R.cols() != m) throw InputError("O-operator must map the module into the algebra");
  Matrix out(n + m, n + m);
  out.set_block(0, n, R);
  return out;
}

bool inverse_cocycle_check(const MD3LieAlgebra& md, const Representation& rep, const Matrix& R) {
  if (R.rows() != md.dim() || R.cols() != rep.module_dim()) throw InputError("O-operator has wrong shape");
  const auto inv = inverse(R);
  if (!inv) throw InputError("operator is not invertible");
  const ComplexAssembly cx(md, rep);
  return is_cocycle(cx, TotalCochain{1, Cochain::from_linear_map(*inv), std::nullopt}).cocycle;
}

}  // namespace mdlie
