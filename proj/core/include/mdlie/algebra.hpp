#pragma once

#include <cstddef>

#include "mdlie/matrix.hpp"
#include "mdlie/multilinear.hpp"
#include "mdlie/report.hpp"
#include "mdlie/scalar.hpp"

namespace mdlie {

/// Finite-dimensional algebra with a totally antisymmetric ternary bracket
/// given by structure constants. Construction does not check the
/// fundamental identity; call verify_3lie for that.
class ThreeLieAlgebra {
 public:
  ThreeLieAlgebra() = default;
  explicit ThreeLieAlgebra(SkewTernaryTensor bracket);
  static ThreeLieAlgebra abelian(std::size_t n);

  std::size_t dim() const noexcept { return bracket_.dim_in(); }
  const SkewTernaryTensor& bracket() const noexcept { return bracket_; }

  Vector operator()(const Vector& x, const Vector& y, const Vector& z) const { return bracket_(x, y, z); }
  Vector basis_bracket(std::size_t i, std::size_t j, std::size_t k) const {
    return bracket_.basis_value(i, j, k);
  }

  /// Matrix of z ↦ [x, y, z].
  Matrix left_multiplication(const Vector& x, const Vector& y) const;
  Matrix left_multiplication(std::size_t i, std::size_t j) const;

  friend bool operator==(const ThreeLieAlgebra&, const ThreeLieAlgebra&) = default;

 private:
  SkewTernaryTensor bracket_;
};

/// Operator d (column convention) together with its weight λ.
struct ModifiedDifferential {
  Matrix d;
  Scalar lambda;
  friend bool operator==(const ModifiedDifferential&, const ModifiedDifferential&) = default;
};

/// A 3-Lie algebra carrying a candidate modified λ-differential.
class MD3LieAlgebra {
 public:
  MD3LieAlgebra() = default;
  /// Throws InputError unless d is dim x dim.
  MD3LieAlgebra(ThreeLieAlgebra algebra, Matrix d, Scalar lambda);

  std::size_t dim() const noexcept { return algebra_.dim(); }
  const ThreeLieAlgebra& algebra() const noexcept { return algebra_; }
  const ModifiedDifferential& diff() const noexcept { return diff_; }
  const Matrix& d() const noexcept { return diff_.d; }
  const Scalar& lambda() const noexcept { return diff_.lambda; }

  friend bool operator==(const MD3LieAlgebra&, const MD3LieAlgebra&) = default;

 private:
  ThreeLieAlgebra algebra_;
  ModifiedDifferential diff_;
};

/// Law names used in reports.
inline constexpr std::string_view kFundamentalIdentity = "fundamental_identity";
inline constexpr std::string_view kModifiedDifferentialLaw = "modified_differential";
inline constexpr std::string_view kBracketHomomorphism = "bracket_homomorphism";
inline constexpr std::string_view kDifferentialIntertwining = "differential_intertwining";

/// Checks [a1,a2,[a3,a4,a5]] = [[a1,a2,a3],a4,a5] + [a3,[a1,a2,a4],a5] + [a3,a4,[a1,a2,a5]]
/// on basis tuples. Both sides are skew in (a1,a2) and in (a3,a4), so tuples
/// with a1 < a2 and a3 < a4 decide the identity.
VerificationReport verify_3lie(const ThreeLieAlgebra& a);

/// Checks d[a,b,c] = [da,b,c] + [a,db,c] + [a,b,dc] + λ[a,b,c] on basis triples i < j < k.
VerificationReport verify_modified_differential(const MD3LieAlgebra& md);

/// Whether D[a,b,c] = [Da,b,c] + [a,Db,c] + [a,b,Dc] for all basis triples.
bool is_derivation(const ThreeLieAlgebra& a, const Matrix& D);

/// Whether d + (λ/2)·id is a derivation. Evaluated over every ordered basis
/// triple, independently of verify_modified_differential.
bool derivation_shift_check(const MD3LieAlgebra& md);

/// Bracket and intertwining conditions for eta: src -> dst (a dst.dim x src.dim matrix).
/// Throws InputError on a shape mismatch.
VerificationReport homomorphism_report(const Matrix& eta, const MD3LieAlgebra& src, const MD3LieAlgebra& dst);
bool homomorphism_check(const Matrix& eta, const MD3LieAlgebra& src, const MD3LieAlgebra& dst);
/// Homomorphism that is also invertible.
bool is_isomorphism(const Matrix& eta, const MD3LieAlgebra& src, const MD3LieAlgebra& dst);

}  // namespace mdlie
