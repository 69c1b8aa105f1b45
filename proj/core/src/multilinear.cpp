#include "mdlie/multilinear.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mdlie/error.hpp"

namespace mdlie {

std::vector<PairIndex> pair_basis(std::size_t n) {
  std::vector<PairIndex> out;
  out.reserve(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::size_t pair_position(std::size_t n, std::size_t i, std::size_t j) {
  if (!(i < j && j < n)) throw InputError("pair index out of range");
  // Rows 0..i-1 contribute (n-1) + (n-2) + ... + (n-i) pairs.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

SignedPair locate_pair(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw InputError("pair index out of range");
  if (i == j) return {0, 0};
  if (i < j) return {pair_position(n, i, j), 1};
  return {pair_position(n, j, i), -1};
}

Vector wedge(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw InputError("wedge: length mismatch");
  const std::size_t n = u.size();
  Vector out(pair_count(n));
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out[p++] = u[i] * v[j] - u[j] * v[i];
  return out;
}

std::size_t cochain_dim(int degree, std::size_t n, std::size_t m) {
  return CochainSpace(degree, n, m).dim();
}

// ---------------------------------------------------------------------------

SkewTernaryTensor::SkewTernaryTensor(std::size_t dim_in, std::size_t dim_out)
    : dim_in_(dim_in), dim_out_(dim_out), slots_(dim_in * dim_in * dim_in) {
  for (std::size_t i = 0; i < dim_in; ++i)
    for (std::size_t j = i + 1; j < dim_in; ++j)
      for (std::size_t k = j + 1; k < dim_in; ++k) {
        const auto idx = static_cast<std::int32_t>(triples_.size());
        triples_.push_back({i, j, k});
        // Even permutations get +1, odd get -1.
        auto put = [&](std::size_t a, std::size_t b, std::size_t c, std::int8_t s) {
          slots_[(a * dim_in + b) * dim_in + c] = {idx, s};
        };
        put(i, j, k, 1);
        put(j, k, i, 1);
        put(k, i, j, 1);
        put(j, i, k, -1);
        put(i, k, j, -1);
        put(k, j, i, -1);
      }
  values_.assign(triples_.size(), zero_vector(dim_out));
}

void SkewTernaryTensor::set(std::size_t i, std::size_t j, std::size_t k, const Vector& value) {
  if (i >= dim_in_ || j >= dim_in_ || k >= dim_in_) throw InputError("tensor index out of range");
  if (value.size() != dim_out_) throw InputError("tensor value has wrong length");
  const Slot& s = slot(i, j, k);
  if (s.sign == 0) {
    if (!mdlie::is_zero(value))
      throw InputError("antisymmetric tensor must vanish on repeated arguments");
    return;
  }
  values_[static_cast<std::size_t>(s.index)] = s.sign > 0 ? value : -value;
}

void SkewTernaryTensor::set_canonical(std::size_t t, Vector value) {
  if (value.size() != dim_out_) throw InputError("tensor value has wrong length");
  values_.at(t) = std::move(value);
}

Vector SkewTernaryTensor::basis_value(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_in_ || j >= dim_in_ || k >= dim_in_) throw InputError("tensor index out of range");
  const Slot& s = slot(i, j, k);
  if (s.sign == 0) return zero_vector(dim_out_);
  const Vector& v = values_[static_cast<std::size_t>(s.index)];
  return s.sign > 0 ? v : -v;
}

namespace {
std::vector<std::size_t> support(const Vector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.push_back(i);
  return out;
}
}  // namespace

Vector SkewTernaryTensor::operator()(const Vector& x, const Vector& y, const Vector& z) const {
  if (x.size() != dim_in_ || y.size() != dim_in_ || z.size() != dim_in_)
    throw InputError("tensor argument has wrong length");
  Vector out = zero_vector(dim_out_);
  const auto sx = support(x), sy = support(y), sz = support(z);
  Scalar c;
  for (std::size_t i : sx)
    for (std::size_t j : sy) {
      if (i == j) continue;
      for (std::size_t k : sz) {
        const Slot& s = slot(i, j, k);
        if (s.sign == 0) continue;
        c = x[i] * y[j] * z[k];
        if (s.sign < 0) c = -c;
        axpy(out, c, values_[static_cast<std::size_t>(s.index)]);
      }
    }
  return out;
}

bool SkewTernaryTensor::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Vector& v) { return mdlie::is_zero(v); });
}

SkewTernaryTensor SkewTernaryTensor::compose_output(const Matrix& op) const {
  if (op.cols() != dim_out_) throw InputError("compose_output: shape mismatch");
  SkewTernaryTensor out(dim_in_, op.rows());
  for (std::size_t t = 0; t < values_.size(); ++t) out.values_[t] = op.apply(values_[t]);
  return out;
}

SkewTernaryTensor& SkewTernaryTensor::operator+=(const SkewTernaryTensor& other) {
  if (dim_in_ != other.dim_in_ || dim_out_ != other.dim_out_) throw InputError("tensor shape mismatch");
  for (std::size_t t = 0; t < values_.size(); ++t) values_[t] += other.values_[t];
  return *this;
}

SkewTernaryTensor& SkewTernaryTensor::operator-=(const SkewTernaryTensor& other) {
  if (dim_in_ != other.dim_in_ || dim_out_ != other.dim_out_) throw InputError("tensor shape mismatch");
  for (std::size_t t = 0; t < values_.size(); ++t) values_[t] -= other.values_[t];
  return *this;
}

SkewTernaryTensor operator*(const Scalar& c, const SkewTernaryTensor& t) {
  SkewTernaryTensor out = t;
  for (auto& v : out.values_) v = c * v;
  return out;
}

// ---------------------------------------------------------------------------

Cochain Cochain::zero(int degree, std::size_t n, std::size_t m) {
  return {degree, n, m, zero_vector(cochain_dim(degree, n, m))};
}

Cochain Cochain::from_linear_map(const Matrix& f) {
  Cochain c = zero(1, f.cols(), f.rows());
  for (std::size_t k = 0; k < f.cols(); ++k)
    for (std::size_t r = 0; r < f.rows(); ++r) c.coords[k * f.rows() + r] = f(r, k);
  return c;
}

Matrix Cochain::as_linear_map() const {
  if (degree != 1) throw InputError("as_linear_map requires a degree-1 cochain");
  Matrix f(module_dim, algebra_dim);
  for (std::size_t k = 0; k < algebra_dim; ++k)
    for (std::size_t r = 0; r < module_dim; ++r) f(r, k) = coords.at(k * module_dim + r);
  return f;
}

CochainSpace::CochainSpace(int degree, std::size_t n, std::size_t m)
    : degree_(degree), n_(n), m_(m), pairs_(pair_count(n)), arguments_(n) {
  if (degree < 1) throw InputError("cochain degree must be at least 1, got " + std::to_string(degree));
  for (int q = 1; q < degree; ++q) arguments_ *= pairs_;
}

std::size_t CochainSpace::argument_index(std::span<const std::size_t> pair_positions,
                                         std::size_t last) const {
  std::size_t idx = 0;
  for (std::size_t p : pair_positions) idx = idx * pairs_ + p;
  return idx * n_ + last;
}

std::size_t CochainSpace::decode(std::size_t argument, std::span<std::size_t> pair_positions) const {
  const std::size_t last = argument % n_;
  argument /= n_;
  for (std::size_t s = pair_positions.size(); s-- > 0;) {
    pair_positions[s] = argument % pairs_;
    argument /= pairs_;
  }
  return last;
}

Vector evaluate(const Cochain& c, std::span<const Vector> pair_args, const Vector& last) {
  const std::size_t n = c.algebra_dim, m = c.module_dim;
  if (pair_args.size() + 1 != static_cast<std::size_t>(c.degree))
    throw InputError("evaluate: wrong number of arguments");
  const std::size_t np = pair_count(n);
  for (const auto& p : pair_args)
    if (p.size() != np) throw InputError("evaluate: pair argument has wrong length");
  if (last.size() != n) throw InputError("evaluate: last argument has wrong length");

  // Walk the sparse product of supports, accumulating coefficient * basis value.
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(pair_args.size() + 1);
  for (const auto& p : pair_args) supports.push_back(support(p));
  supports.push_back(support(last));
  for (const auto& s : supports)
    if (s.empty()) return zero_vector(m);

  Vector out = zero_vector(m);
  const std::size_t slots = supports.size();
  std::vector<std::size_t> cursor(slots, 0);
  while (true) {
    Scalar coef = 1;
    std::size_t base = 0;
    for (std::size_t s = 0; s + 1 < slots; ++s) {
      const std::size_t b = supports[s][cursor[s]];
      coef *= pair_args[s][b];
      base = base * np + b;
    }
    const std::size_t k = supports.back()[cursor.back()];
    coef *= last[k];
    base = base * n + k;
    for (std::size_t r = 0; r < m; ++r) out[r] += coef * c.coords[base * m + r];
    std::size_t s = slots;
    while (s-- > 0) {
      if (++cursor[s] < supports[s].size()) break;
      cursor[s] = 0;
    }
    if (s == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

Vector evaluate(const Cochain& c, const Vector& x) { return evaluate(c, {}, x); }

Vector evaluate(const Cochain& c, const Vector& x, const Vector& y, const Vector& z) {
  const Vector p = wedge(x, y);
  return evaluate(c, std::span<const Vector>(&p, 1), z);
}

Cochain embed_skew_trilinear(const SkewTernaryTensor& t) {
  const std::size_t n = t.dim_in(), m = t.dim_out();
  Cochain c = Cochain::zero(2, n, m);
  const auto pairs = pair_basis(n);
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t k = 0; k < n; ++k) {
      const Vector v = t.basis_value(pairs[p].i, pairs[p].j, k);
      std::copy(v.begin(), v.end(), c.coords.begin() + static_cast<std::ptrdiff_t>((p * n + k) * m));
    }
  return c;
}

std::optional<SkewTernaryTensor> skew_from_cochain(const Cochain& c) {
  if (c.degree != 2) throw InputError("skew_from_cochain requires a degree-2 cochain");
  SkewTernaryTensor t(c.algebra_dim, c.module_dim);
  for (std::size_t s = 0; s < t.triple_count(); ++s) {
    const auto& [i, j, k] = t.triple(s);
    t.set_canonical(s, evaluate(c, unit_vector(c.algebra_dim, i), unit_vector(c.algebra_dim, j),
                                unit_vector(c.algebra_dim, k)));
  }
  if (embed_skew_trilinear(t) != c) return std::nullopt;
  return t;
}

Matrix skew_embedding_matrix(std::size_t n, std::size_t m) {
  SkewTernaryTensor shape(n, m);
  Matrix e(cochain_dim(2, n, m), shape.triple_count() * m);
  for (std::size_t t = 0; t < shape.triple_count(); ++t)
    for (std::size_t r = 0; r < m; ++r) {
      SkewTernaryTensor basis(n, m);
      basis.set_canonical(t, unit_vector(m, r));
      const Cochain col = embed_skew_trilinear(basis);
      for (std::size_t row = 0; row < col.coords.size(); ++row)
        if (sgn(col.coords[row]) != 0) e(row, t * m + r) = col.coords[row];
    }
  return e;
}

SkewTernaryTensor tensor_from_coordinates(std::size_t n, std::size_t m, std::span<const Scalar> coords) {
  SkewTernaryTensor t(n, m);
  if (coords.size() != t.triple_count() * m) throw InputError("tensor coordinates have wrong length");
  for (std::size_t s = 0; s < t.triple_count(); ++s)
    t.set_canonical(s, Vector(coords.begin() + static_cast<std::ptrdiff_t>(s * m),
                              coords.begin() + static_cast<std::ptrdiff_t>((s + 1) * m)));
  return t;
}

}  // namespace mdlie
