#include "mdlie/cohomology.hpp"

#include <string>

#include "mdlie/error.hpp"
#include "mdlie/leibniz.hpp"
#include "mdlie/linalg.hpp"

namespace mdlie {

Vector TotalCochain::coords() const {
  Vector out = f.coords;
  if (g) out.insert(out.end(), g->coords.begin(), g->coords.end());
  return out;
}

TotalCochain TotalCochain::from_coords(int degree, std::size_t n, std::size_t m, std::span<const Scalar> coords) {
  TotalCochain c = zero(degree, n, m);
  const std::size_t fd = c.f.coords.size();
  const std::size_t gd = c.g ? c.g->coords.size() : 0;
  if (coords.size() != fd + gd) throw InputError("total cochain coordinates have wrong length");
  std::copy(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(fd), c.f.coords.begin());
  if (c.g) std::copy(coords.begin() + static_cast<std::ptrdiff_t>(fd), coords.end(), c.g->coords.begin());
  return c;
}

TotalCochain TotalCochain::zero(int degree, std::size_t n, std::size_t m) {
  TotalCochain c{degree, Cochain::zero(degree, n, m), std::nullopt};
  if (degree >= 2) c.g = Cochain::zero(degree - 1, n, m);
  return c;
}

namespace {

void require_degree(int q) {
  if (q < 1) throw InputError("complex degree must be at least 1, got " + std::to_string(q));
}

std::vector<std::size_t> support(const Vector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.push_back(i);
  return out;
}

// Writes the terms of one row block (target argument X) of an assembled
// operator. Each term is coef * op(f(P..., last)) with the pair slots given
// by basis positions and `last` an arbitrary vector; op == nullptr means the
// identity on M.
class RowBlock {
 public:
  RowBlock(Matrix& out, const CochainSpace& src, std::size_t row_arg)
      : out_(out), src_(src), row0_(row_arg * src.module_dim()) {}

  void add(const Matrix* op, const Scalar& coef, std::span<const std::size_t> pairs, const Vector& last) {
    if (sgn(coef) == 0) return;
    const std::size_t m = src_.module_dim();
    for (std::size_t k : support(last)) {
      const Scalar c = coef * last[k];
      const std::size_t col0 = src_.argument_index(pairs, k) * m;
      if (op == nullptr) {
        for (std::size_t r = 0; r < m; ++r) out_(row0_ + r, col0 + r) += c;
      } else {
        for (std::size_t r1 = 0; r1 < m; ++r1)
          for (std::size_t r = 0; r < m; ++r)
            if (sgn((*op)(r1, r)) != 0) out_(row0_ + r1, col0 + r) += c * (*op)(r1, r);
      }
    }
  }

 private:
  Matrix& out_;
  const CochainSpace& src_;
  std::size_t row0_;
};

Scalar parity(std::size_t i) { return i % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

ComplexAssembly::ComplexAssembly(MD3LieAlgebra md, Representation rep)
    : md_(std::move(md)), rep_(std::move(rep)), cache_(std::make_shared<Cache>()) {
  if (rep_.algebra_dim() != md_.dim()) throw InputError("representation is over an algebra of another dimension");
  if (rep_.lambda() != md_.lambda()) throw InputError("representation weight differs from the algebra's");
  const std::size_t n = md_.dim();
  action_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) action_.push_back(rep_.action(i, j));
}

std::size_t ComplexAssembly::cochain_dim(int q) const {
  require_degree(q);
  return mdlie::cochain_dim(q, algebra_dim(), module_dim());
}

std::size_t ComplexAssembly::total_dim(int q) const {
  return q == 1 ? cochain_dim(1) : cochain_dim(q) + cochain_dim(q - 1);
}

const Matrix& ComplexAssembly::delta(int q) const { return cached(Kind::Delta, q); }
const Matrix& ComplexAssembly::phi(int q) const { return cached(Kind::Phi, q); }
const Matrix& ComplexAssembly::partial(int q) const { return cached(Kind::Partial, q); }

const Matrix& ComplexAssembly::cached(Kind kind, int q) const {
  require_degree(q);
  const auto key = std::make_pair(static_cast<int>(kind), q);
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->entries.find(key); it != cache_->entries.end()) return *it->second;
  }
  // Built outside the lock so that nested lookups (∂ uses δ and Φ) do not
  // deadlock; a concurrent duplicate build is discarded.
  auto built = std::make_unique<const Matrix>(build(kind, q));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->entries.try_emplace(key, std::move(built));
  return *it->second;
}

Matrix ComplexAssembly::build(Kind kind, int q) const {
  switch (kind) {
    case Kind::Delta:
      return build_delta(q);
    case Kind::Phi:
      return build_phi(q);
    case Kind::Partial:
      return build_partial(q);
  }
  throw std::logic_error("unknown operator kind");
}

// δf(A_1, ..., A_q, a_{q+1}) with A_i = a_i ∧ b_i, 1-based i:
//   (-1)^{q+1} (ρ(b_q, a_{q+1}) f(A_1..A_{q-1}, a_q) + ρ(a_{q+1}, a_q) f(A_1..A_{q-1}, b_q))
//   + Σ_i (-1)^{i+1} ρ(a_i, b_i) f(..Â_i.., a_{q+1})
//   + Σ_i (-1)^i f(..Â_i.., [a_i, b_i, a_{q+1}])
//   + Σ_{i<k} (-1)^i f(..Â_i.., [A_i, A_k]_F at slot k, .., a_{q+1})
Matrix ComplexAssembly::build_delta(int q) const {
  const std::size_t n = algebra_dim();
  const CochainSpace src(q, n, module_dim()), dst(q + 1, n, module_dim());
  const auto pairs = pair_basis(n);
  const LeibnizData leib = fundamental_leibniz(md_);
  const auto qs = static_cast<std::size_t>(q);
  Matrix out(dst.dim(), src.dim());

  std::vector<std::size_t> ps(qs), rest(qs - 1);
  for (std::size_t x = 0; x < dst.argument_count(); ++x) {
    const std::size_t last = dst.decode(x, ps);
    RowBlock row(out, src, x);
    const Vector e_last = unit_vector(n, last);

    const auto [aq, bq] = pairs[ps[qs - 1]];
    const Scalar outer = parity(qs + 1);
    const std::span<const std::size_t> head(ps.data(), qs - 1);
    row.add(&action_[bq * n + last], outer, head, unit_vector(n, aq));
    row.add(&action_[last * n + aq], outer, head, unit_vector(n, bq));

    for (std::size_t i = 0; i < qs; ++i) {
      const auto [ai, bi] = pairs[ps[i]];
      std::copy(ps.begin(), ps.begin() + static_cast<std::ptrdiff_t>(i), rest.begin());
      std::copy(ps.begin() + static_cast<std::ptrdiff_t>(i + 1), ps.end(),
                rest.begin() + static_cast<std::ptrdiff_t>(i));
      // 0-based i: (-1)^{i+2} = parity(i) and (-1)^{i+1} = -parity(i).
      row.add(&action_[ai * n + bi], parity(i), rest, e_last);
      row.add(nullptr, -parity(i), rest, md_.algebra().basis_bracket(ai, bi, last));

      for (std::size_t k = i + 1; k < qs; ++k) {
        const Vector& prod = leib.product(ps[i], ps[k]);
        const std::size_t saved = rest[k - 1];
        for (std::size_t s : support(prod)) {
          rest[k - 1] = s;
          row.add(nullptr, -parity(i) * prod[s], rest, e_last);
        }
        rest[k - 1] = saved;
      }
    }
  }
  return out;
}

// Φf(A_1, ..., A_{q-1}, a_q) = Σ_i f(.., d a_i ∧ b_i + a_i ∧ d b_i, ..) + f(.., d a_q)
//                              + (q-1) λ f(..) - d_M f(..)
Matrix ComplexAssembly::build_phi(int q) const {
  const std::size_t n = algebra_dim();
  const CochainSpace space(q, n, module_dim());
  const auto pairs = pair_basis(n);
  const Matrix& d = md_.d();
  const auto qs = static_cast<std::size_t>(q);
  Matrix out(space.dim(), space.dim());

  std::vector<Vector> induced;  // d a ∧ b + a ∧ d b on each basis pair
  induced.reserve(pairs.size());
  for (const auto& P : pairs)
    induced.push_back(wedge(d.column(P.i), unit_vector(n, P.j)) + wedge(unit_vector(n, P.i), d.column(P.j)));

  const Scalar weight = Scalar(q - 1) * md_.lambda();
  const Matrix neg_dM = -rep_.d_M();
  std::vector<std::size_t> ps(qs - 1);
  for (std::size_t x = 0; x < space.argument_count(); ++x) {
    const std::size_t last = space.decode(x, ps);
    RowBlock row(out, space, x);
    const Vector e_last = unit_vector(n, last);
    for (std::size_t i = 0; i + 1 < qs; ++i) {
      const Vector& w = induced[ps[i]];
      const std::size_t saved = ps[i];
      for (std::size_t s : support(w)) {
        ps[i] = s;
        row.add(nullptr, w[s], ps, e_last);
      }
      ps[i] = saved;
    }
    row.add(nullptr, 1, ps, d.column(last));
    row.add(nullptr, weight, ps, e_last);
    row.add(&neg_dM, 1, ps, e_last);
  }
  return out;
}

Matrix ComplexAssembly::build_partial(int q) const {
  const Matrix& dq = delta(q);
  const Matrix& fq = phi(q);
  if (q == 1) return vstack(dq, -fq);
  const std::size_t cq1 = cochain_dim(q + 1), cq = cochain_dim(q), cqm = cochain_dim(q - 1);
  Matrix out(cq1 + cq, cq + cqm);
  out.set_block(0, 0, dq);
  out.set_block(cq1, 0, q % 2 == 0 ? fq : -fq);
  out.set_block(cq1, cq, delta(q - 1));
  return out;
}

Cochain ComplexAssembly::apply_delta(const Cochain& f) const {
  if (f.algebra_dim != algebra_dim() || f.module_dim != module_dim())
    throw InputError("cochain does not belong to this complex");
  return {f.degree + 1, f.algebra_dim, f.module_dim, delta(f.degree).apply(f.coords)};
}

Cochain ComplexAssembly::apply_phi(const Cochain& f) const {
  if (f.algebra_dim != algebra_dim() || f.module_dim != module_dim())
    throw InputError("cochain does not belong to this complex");
  return {f.degree, f.algebra_dim, f.module_dim, phi(f.degree).apply(f.coords)};
}

namespace {
void require_shape(const ComplexAssembly& cx, const TotalCochain& c) {
  require_degree(c.degree);
  auto fits = [&](const Cochain& x, int q) {
    return x.degree == q && x.algebra_dim == cx.algebra_dim() && x.module_dim == cx.module_dim() &&
           x.coords.size() == cx.cochain_dim(q);
  };
  const bool ok = fits(c.f, c.degree) && (c.degree == 1 ? !c.g.has_value() : c.g && fits(*c.g, c.degree - 1));
  if (!ok) throw InputError("total cochain does not fit this complex in degree " + std::to_string(c.degree));
}
}  // namespace

TotalCochain ComplexAssembly::apply_partial(const TotalCochain& c) const {
  require_shape(*this, c);
  return TotalCochain::from_coords(c.degree + 1, algebra_dim(), module_dim(), partial(c.degree).apply(c.coords()));
}

CocycleCheck is_cocycle(const ComplexAssembly& cx, const TotalCochain& c) {
  TotalCochain residual = cx.apply_partial(c);
  const bool zero = is_zero(residual.f.coords) && (!residual.g || is_zero(residual.g->coords));
  return {zero, std::move(residual)};
}

std::optional<TotalCochain> is_coboundary(const ComplexAssembly& cx, const TotalCochain& c) {
  require_shape(cx, c);
  if (c.degree < 2) throw InputError("coboundaries are defined from degree 2 on");
  auto x = solve_in_image(cx.partial(c.degree - 1), c.coords());
  if (!x) return std::nullopt;
  return TotalCochain::from_coords(c.degree - 1, cx.algebra_dim(), cx.module_dim(), *x);
}

CohomologyDims cohomology_dim(const ComplexAssembly& cx, int q, bool with_representatives) {
  require_degree(q);
  CohomologyDims out;
  const Matrix& dq = cx.partial(q);
  out.cocycles = cx.total_dim(q) - rank(dq);
  out.coboundaries = q == 1 ? 0 : rank(cx.partial(q - 1));
  out.cohomology = out.cocycles - out.coboundaries;
  if (!with_representatives || out.cohomology == 0) return out;

  // Extend a basis of B^q by kernel vectors of ∂_q until the rank reaches dim Z^q.
  Matrix span = q == 1 ? Matrix(cx.total_dim(q), 0) : cx.partial(q - 1);
  std::size_t current = out.coboundaries;
  for (const Vector& v : kernel_basis(dq)) {
    Matrix candidate = hstack(span, Matrix::from_columns(v.size(), {v}));
    const std::size_t r = rank(candidate);
    if (r == current) continue;
    span = std::move(candidate);
    current = r;
    out.representatives.push_back(TotalCochain::from_coords(q, cx.algebra_dim(), cx.module_dim(), v));
    if (current == out.cocycles) break;
  }
  return out;
}

bool satisfies_1cocycle_conditions(const MD3LieAlgebra& md, const Representation& rep, const Cochain& f) {
  const std::size_t n = md.dim();
  if (f.degree != 1 || f.algebra_dim != n || f.module_dim != rep.module_dim())
    throw InputError("1-cochain has wrong shape");
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t b1 = 0; b1 < n; ++b1)
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        Vector v = rep.action(b1, a2).apply(evaluate(f, e(a1)));
        v += rep.action(a2, a1).apply(evaluate(f, e(b1)));
        v += rep.action(a1, b1).apply(evaluate(f, e(a2)));
        v -= evaluate(f, md.algebra().basis_bracket(a1, b1, a2));
        if (!is_zero(v)) return false;
      }
  for (std::size_t a = 0; a < n; ++a)
    if (rep.d_M().apply(evaluate(f, e(a))) != evaluate(f, md.d().column(a))) return false;
  return true;
}

bool satisfies_2cocycle_conditions(const MD3LieAlgebra& md, const Representation& rep, const Cochain& f,
                                   const Cochain& g) {
  const std::size_t n = md.dim();
  if (f.degree != 2 || f.algebra_dim != n || f.module_dim != rep.module_dim())
    throw InputError("2-cochain has wrong shape");
  if (g.degree != 1 || g.algebra_dim != n || g.module_dim != rep.module_dim())
    throw InputError("1-cochain has wrong shape");
  const auto& a = md.algebra();
  const Matrix& d = md.d();
  auto e = [n](std::size_t i) { return unit_vector(n, i); };
  auto rho = [&](std::size_t i, std::size_t j) { return rep.action(i, j); };

  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t b1 = 0; b1 < n; ++b1)
      for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t b2 = 0; b2 < n; ++b2)
          for (std::size_t a3 = 0; a3 < n; ++a3) {
            Vector v = -rho(b2, a3).apply(evaluate(f, e(a1), e(b1), e(a2)));
            v -= rho(a3, a2).apply(evaluate(f, e(a1), e(b1), e(b2)));
            v += rho(a1, b1).apply(evaluate(f, e(a2), e(b2), e(a3)));
            v -= rho(a2, b2).apply(evaluate(f, e(a1), e(b1), e(a3)));
            v -= evaluate(f, e(a2), e(b2), a.basis_bracket(a1, b1, a3));
            v += evaluate(f, e(a1), e(b1), a.basis_bracket(a2, b2, a3));
            v -= evaluate(f, a.basis_bracket(a1, b1, a2), e(b2), e(a3));
            v -= evaluate(f, e(a2), a.basis_bracket(a1, b1, b2), e(a3));
            if (!is_zero(v)) return false;
          }

  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t b1 = 0; b1 < n; ++b1)
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        Vector v = rho(b1, a2).apply(evaluate(g, e(a1)));
        v += rho(a2, a1).apply(evaluate(g, e(b1)));
        v += rho(a1, b1).apply(evaluate(g, e(a2)));
        v -= evaluate(g, a.basis_bracket(a1, b1, a2));
        const Vector fab = evaluate(f, e(a1), e(b1), e(a2));
        v += evaluate(f, d.column(a1), e(b1), e(a2));
        v += evaluate(f, e(a1), d.column(b1), e(a2));
        v += evaluate(f, e(a1), e(b1), d.column(a2));
        axpy(v, md.lambda(), fab);
        v -= rep.d_M().apply(fab);
        if (!is_zero(v)) return false;
      }
  return true;
}

}  // namespace mdlie
