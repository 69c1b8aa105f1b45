#include "mdlie/extension.hpp"

#include <stdexcept>

#include "mdlie/error.hpp"
#include "mdlie/linalg.hpp"

namespace mdlie {

namespace {

Vector flatten(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

}  // namespace

AbelianExtension build_abelian_extension(const MD3LieAlgebra& md, const Representation& rep,
                                         const SkewTernaryTensor& f, const Matrix& g) {
  const std::size_t n = md.dim(), m = rep.module_dim(), total = n + m;
  if (rep.algebra_dim() != n) throw InputError("representation is over an algebra of another dimension");
  if (rep.lambda() != md.lambda()) throw InputError("representation weight differs from the algebra's");
  if (f.dim_in() != n || f.dim_out() != m) throw InputError("f must map A x A x A into M");
  if (g.rows() != m || g.cols() != n) throw InputError("g must map A into M");

  const MD3LieAlgebra split = semidirect_product(md, rep);
  SkewTernaryTensor br = split.algebra().bracket();
  for (std::size_t t = 0; t < f.triple_count(); ++t) {
    const auto& [i, j, k] = f.triple(t);
    Vector v = br.basis_value(i, j, k);
    const Vector& fv = f.canonical_value(t);
    for (std::size_t r = 0; r < m; ++r) v[n + r] += fv[r];
    br.set(i, j, k, v);
  }
  Matrix d = split.d();
  d.set_block(n, 0, g);

  Matrix inclusion(total, m), projection(n, total);
  inclusion.set_block(n, 0, Matrix::identity(m));
  projection.set_block(0, 0, Matrix::identity(n));
  return {md, rep.d_M(), MD3LieAlgebra(ThreeLieAlgebra(std::move(br)), std::move(d), md.lambda()),
          std::move(inclusion), std::move(projection), f, g};
}

VerificationReport verify_abelian_extension(const AbelianExtension& ext) {
  const std::size_t n = ext.base.dim(), m = ext.module_dim(), total = ext.total.dim();
  if (ext.module_d.cols() != m || ext.inclusion.rows() != total || ext.inclusion.cols() != m ||
      ext.projection.rows() != n || ext.projection.cols() != total)
    throw InputError("extension maps have inconsistent shapes");

  VerificationReport report = verify_3lie(ext.total.algebra());
  report.merge(verify_modified_differential(ext.total));
  report.check(kExtensionWeight, {}, {ext.total.lambda()}, {ext.base.lambda()});

  auto count = [](std::size_t k) { return Scalar(static_cast<unsigned long>(k)); };
  Vector exact_lhs = flatten(ext.projection * ext.inclusion);
  Vector exact_rhs = zero_vector(n * m);
  for (auto [got, want] : {std::pair{rank(ext.inclusion), m}, {rank(ext.projection), n}, {total, n + m}}) {
    exact_lhs.push_back(count(got));
    exact_rhs.push_back(count(want));
  }
  report.check(kExtensionExactness, {}, exact_lhs, exact_rhs);

  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = u + 1; v < m; ++v)
        report.check(kExtensionAbelian, {x, u, v},
                     ext.total.algebra()(unit_vector(total, x), ext.inclusion.column(u), ext.inclusion.column(v)),
                     zero_vector(total));

  const MD3LieAlgebra module(ThreeLieAlgebra::abelian(m), ext.module_d, ext.base.lambda());
  report.merge(homomorphism_report(ext.inclusion, module, ext.total));
  report.merge(homomorphism_report(ext.projection, ext.total, ext.base));
  return report;
}

TotalCochain ExtractedCocycle::as_cochain() const {
  return {2, embed_skew_trilinear(upsilon), Cochain::from_linear_map(mu)};
}

Matrix default_section(const AbelianExtension& ext) {
  const std::size_t n = ext.base.dim();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < n; ++k) {
    auto c = solve_in_image(ext.projection, unit_vector(n, k));
    if (!c) throw InputError("projection is not surjective");
    cols.push_back(std::move(*c));
  }
  return Matrix::from_columns(ext.total.dim(), cols);
}

ExtractedCocycle extract_cocycle(const AbelianExtension& ext, const Matrix& s) {
  const std::size_t n = ext.base.dim(), m = ext.module_dim(), total = ext.total.dim();
  if (s.rows() != total || s.cols() != n) throw InputError("section has wrong shape");
  if (ext.projection * s != Matrix::identity(n)) throw InputError("not a section: projection * s != id");
  if (ext.inclusion.rows() != total || ext.inclusion.cols() != m) throw InputError("inclusion has wrong shape");
  const auto split = inverse(hstack(s, ext.inclusion));
  if (!split) throw InputError("section image and module do not span the total space");
  const Matrix q = split->block(n, 0, m, total);  // M-coordinate along s(A)

  const auto& br = ext.total.algebra();
  const Matrix& dhat = ext.total.d();
  Representation rep(n, m, q * dhat * ext.inclusion, ext.base.lambda());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Vector> cols;
      for (std::size_t r = 0; r < m; ++r) cols.push_back(q.apply(br(s.column(i), s.column(j), ext.inclusion.column(r))));
      rep.set_action(i, j, Matrix::from_columns(m, cols));
    }

  auto upsilon = SkewTernaryTensor::from_canonical(n, m, [&](std::size_t i, std::size_t j, std::size_t k) {
    return q.apply(br(s.column(i), s.column(j), s.column(k)) - s.apply(ext.base.algebra().basis_bracket(i, j, k)));
  });
  Matrix mu = q * (dhat * s - s * ext.base.d());
  return {std::move(rep), std::move(upsilon), std::move(mu)};
}

bool is_extension_morphism(const Matrix& eta, const AbelianExtension& ext1, const AbelianExtension& ext2) {
  if (eta.rows() != ext2.total.dim() || eta.cols() != ext1.total.dim()) return false;
  return is_isomorphism(eta, ext1.total, ext2.total) && eta * ext1.inclusion == ext2.inclusion &&
         ext2.projection * eta == ext1.projection;
}

std::optional<EquivalenceWitness> extensions_equivalent(const AbelianExtension& ext1, const AbelianExtension& ext2) {
  if (!(ext1.base == ext2.base)) throw InputError("extensions are over different base algebras");
  if (ext1.module_d != ext2.module_d) throw InputError("extensions have different module operators");
  const std::size_t n = ext1.base.dim(), m = ext1.module_dim();

  const Matrix s1 = default_section(ext1), s2 = default_section(ext2);
  const ExtractedCocycle c1 = extract_cocycle(ext1, s1), c2 = extract_cocycle(ext2, s2);
  if (!(c1.rep == c2.rep)) throw InputError("extensions induce different actions on the module");

  const ComplexAssembly cx(ext1.base, c1.rep);
  const Vector diff = c1.as_cochain().coords() - c2.as_cochain().coords();
  const auto pre = is_coboundary(cx, TotalCochain::from_coords(2, n, m, diff));
  if (!pre) return std::nullopt;

  Matrix iota = pre->f.as_linear_map();
  const auto split1 = inverse(hstack(s1, ext1.inclusion));
  Matrix eta = hstack(s2 + ext2.inclusion * iota, ext2.inclusion) * *split1;
  if (!is_extension_morphism(eta, ext1, ext2))
    throw std::logic_error("cohomologous extensions produced a map that is not an equivalence");
  return EquivalenceWitness{std::move(eta), std::move(iota)};
}

TStarExtension tstar_extension(const MD3LieAlgebra& md, const SkewTernaryTensor& f, const Matrix& g) {
  const std::size_t n = md.dim();
  const Representation coad = dual_representation(adjoint_representation(md));
  Matrix form(2 * n, 2 * n);
  form.set_block(0, n, Matrix::identity(n));
  form.set_block(n, 0, Matrix::identity(n));
  return {build_abelian_extension(md, coad, f, g), std::move(form)};
}

VerificationReport is_metrised(const MD3LieAlgebra& md, const Matrix& B) {
  const std::size_t n = md.dim();
  if (B.rows() != n || B.cols() != n) throw InputError("bilinear form must be dim x dim");
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) report.check(kFormSymmetric, {i, j}, {B(i, j)}, {B(j, i)});
  report.check(kFormNondegenerate, {}, {Scalar(static_cast<long>(rank(B)))}, {Scalar(static_cast<long>(n))});

  const auto& a = md.algebra();
  auto form = [&](const Vector& x, std::size_t col) {
    Scalar s = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (sgn(x[r]) != 0) s += x[r] * B(r, col);
    return s;
  };
  auto form_left = [&](std::size_t row, const Vector& y) {
    Scalar s = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(y[c]) != 0) s += B(row, c) * y[c];
    return s;
  };
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t a3 = 0; a3 < n; ++a3)
        for (std::size_t a4 = 0; a4 < n; ++a4) {
          const Scalar v = form(a.basis_bracket(a1, a2, a3), a4) + form_left(a3, a.basis_bracket(a1, a2, a4));
          report.check(kFormInvariant, {a1, a2, a3, a4}, {v}, {Scalar(0)});
        }
  const Matrix skew = md.d().transpose() * B + B * md.d();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) report.check(kFormDifferential, {i, j}, {skew(i, j)}, {Scalar(0)});
  return report;
}

bool tstar_cyclicity_check(const SkewTernaryTensor& f, const Matrix& g) {
  const std::size_t n = f.dim_in();
  if (f.dim_out() != n || g.rows() != n || g.cols() != n) throw InputError("T* data must be A*-valued");
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t a3 = 0; a3 < n; ++a3) {
        const Vector f3 = f.basis_value(a1, a2, a3);
        for (std::size_t a4 = 0; a4 < n; ++a4)
          if (f3[a4] + f.basis_value(a1, a2, a4)[a3] != 0) return false;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(j, i) + g(i, j) != 0) return false;
  return true;
}

}  // namespace mdlie
