#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdlie/matrix.hpp"
#include "mdlie/scalar.hpp"

namespace mdlie {

/// Basis element e_i ∧ e_j of the exterior square, 0-based with i < j.
struct PairIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

/// All i < j pairs in lexicographic order; C(n,2) entries.
std::vector<PairIndex> pair_basis(std::size_t n);
std::size_t pair_count(std::size_t n);
/// Position of (i, j), i < j, inside pair_basis(n).
std::size_t pair_position(std::size_t n, std::size_t i, std::size_t j);

/// e_i ∧ e_j expressed in the pair basis: a position and a sign, sign 0 when i == j.
struct SignedPair {
  std::size_t position = 0;
  int sign = 0;
};
SignedPair locate_pair(std::size_t n, std::size_t i, std::size_t j);

/// u ∧ v in pair-basis coordinates.
Vector wedge(const Vector& u, const Vector& v);

/// Dimension C(n,2)^(q-1) * n * m of the degree-q cochain space. Throws for q < 1.
std::size_t cochain_dim(int degree, std::size_t n, std::size_t m);

/// Totally antisymmetric trilinear map k^n x k^n x k^n -> k^dim_out, stored by its
/// values on canonical triples i < j < k. Signs for other orderings are computed
/// on access, so skewness holds by construction.
class SkewTernaryTensor {
 public:
  SkewTernaryTensor() = default;
  SkewTernaryTensor(std::size_t dim_in, std::size_t dim_out);

  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }
  std::size_t triple_count() const noexcept { return triples_.size(); }
  const std::array<std::size_t, 3>& triple(std::size_t t) const { return triples_[t]; }
  const Vector& canonical_value(std::size_t t) const { return values_[t]; }

  /// Sets the value on (i, j, k) for distinct indices in any order; the stored
  /// canonical value absorbs the permutation sign.
  void set(std::size_t i, std::size_t j, std::size_t k, const Vector& value);
  void set_canonical(std::size_t t, Vector value);

  /// Signed value on basis vectors; zero on repeated indices.
  Vector basis_value(std::size_t i, std::size_t j, std::size_t k) const;

  /// Trilinear evaluation on arbitrary vectors.
  Vector operator()(const Vector& x, const Vector& y, const Vector& z) const;

  bool is_zero() const;

  /// Composes each output with a linear map: (op ∘ t)(x, y, z).
  SkewTernaryTensor compose_output(const Matrix& op) const;

  SkewTernaryTensor& operator+=(const SkewTernaryTensor& other);
  SkewTernaryTensor& operator-=(const SkewTernaryTensor& other);
  friend SkewTernaryTensor operator+(SkewTernaryTensor a, const SkewTernaryTensor& b) { return a += b; }
  friend SkewTernaryTensor operator-(SkewTernaryTensor a, const SkewTernaryTensor& b) { return a -= b; }
  friend SkewTernaryTensor operator*(const Scalar& c, const SkewTernaryTensor& t);

  friend bool operator==(const SkewTernaryTensor& a, const SkewTernaryTensor& b) {
    return a.dim_in_ == b.dim_in_ && a.dim_out_ == b.dim_out_ && a.values_ == b.values_;
  }

  /// Builds a tensor from its values on canonical triples.
  template <typename F>
  static SkewTernaryTensor from_canonical(std::size_t dim_in, std::size_t dim_out, F&& value_of) {
    SkewTernaryTensor t(dim_in, dim_out);
    for (std::size_t s = 0; s < t.triple_count(); ++s) {
      const auto& [i, j, k] = t.triple(s);
      t.set_canonical(s, value_of(i, j, k));
    }
    return t;
  }

 private:
  struct Slot {
    std::int32_t index = -1;
    std::int8_t sign = 0;
  };
  const Slot& slot(std::size_t i, std::size_t j, std::size_t k) const {
    return slots_[(i * dim_in_ + j) * dim_in_ + k];
  }

  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
  std::vector<std::array<std::size_t, 3>> triples_;
  std::vector<Vector> values_;
  std::vector<Slot> slots_;
};

/// Coordinates of a degree-q cochain: multilinear maps
/// (∧²A)^{⊗(q-1)} ⊗ A -> M, skew inside each pair slot and free in the last slot.
/// Coordinate (P_1, ..., P_{q-1}, k, r) is the r-th component of the value on
/// (P_1, ..., P_{q-1}, e_k), laid out in mixed radix with r fastest.
struct Cochain {
  int degree = 1;
  std::size_t algebra_dim = 0;
  std::size_t module_dim = 0;
  Vector coords;

  static Cochain zero(int degree, std::size_t n, std::size_t m);
  /// Degree-1 cochain from a module_dim x algebra_dim matrix.
  static Cochain from_linear_map(const Matrix& f);
  /// Inverse of from_linear_map; requires degree 1.
  Matrix as_linear_map() const;

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Indexing helper for the argument tuples (P_1, ..., P_{q-1}, e_k) of degree-q cochains.
class CochainSpace {
 public:
  CochainSpace(int degree, std::size_t n, std::size_t m);

  int degree() const noexcept { return degree_; }
  std::size_t algebra_dim() const noexcept { return n_; }
  std::size_t module_dim() const noexcept { return m_; }
  std::size_t pairs() const noexcept { return pairs_; }
  /// Number of basis argument tuples, C(n,2)^(q-1) * n.
  std::size_t argument_count() const noexcept { return arguments_; }
  std::size_t dim() const noexcept { return arguments_ * m_; }

  std::size_t argument_index(std::span<const std::size_t> pair_positions, std::size_t last) const;
  /// Inverse of argument_index: fills `pair_positions` (size q-1) and returns the last index.
  std::size_t decode(std::size_t argument, std::span<std::size_t> pair_positions) const;

 private:
  int degree_;
  std::size_t n_;
  std::size_t m_;
  std::size_t pairs_;
  std::size_t arguments_;
};

/// Value of a cochain on general arguments: one pair-basis vector per pair slot
/// and an algebra vector for the last slot.
Vector evaluate(const Cochain& c, std::span<const Vector> pair_args, const Vector& last);

/// Degree-1 evaluation f(x).
Vector evaluate(const Cochain& c, const Vector& x);
/// Degree-2 evaluation f(x ∧ y, z).
Vector evaluate(const Cochain& c, const Vector& x, const Vector& y, const Vector& z);

/// Degree-2 coordinates of a fully skew trilinear map: ((i,j), k, r) holds t(e_i, e_j, e_k)_r.
Cochain embed_skew_trilinear(const SkewTernaryTensor& t);

/// Recovers the tensor from a degree-2 cochain when the cochain is totally
/// antisymmetric in its three algebra arguments; nullopt otherwise.
std::optional<SkewTernaryTensor> skew_from_cochain(const Cochain& c);

/// Matrix of embed_skew_trilinear on tensor coordinates (canonical triple t,
/// output r) at column t*dim_out + r.
Matrix skew_embedding_matrix(std::size_t n, std::size_t m);

/// Inverse of the coordinate layout used by skew_embedding_matrix.
SkewTernaryTensor tensor_from_coordinates(std::size_t n, std::size_t m, std::span<const Scalar> coords);

}  // namespace mdlie
