#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mdlie/algebra.hpp"
#include "mdlie/matrix.hpp"
#include "mdlie/report.hpp"

namespace mdlie {

/// Skew pair action ρ: ∧²A -> End(M) with a module operator d_M and the
/// weight λ it is paired with. Stored per canonical pair i < j; other orders
/// are derived by antisymmetry.
class Representation {
 public:
  Representation() = default;
  /// All actions zero. Throws InputError unless d_M is module_dim x module_dim.
  Representation(std::size_t algebra_dim, std::size_t module_dim, Matrix d_M, Scalar lambda);

  std::size_t algebra_dim() const noexcept { return n_; }
  std::size_t module_dim() const noexcept { return m_; }
  const Matrix& d_M() const noexcept { return d_M_; }
  const Scalar& lambda() const noexcept { return lambda_; }

  /// ρ(e_i, e_j) for any i, j; zero when i == j.
  Matrix action(std::size_t i, std::size_t j) const;
  /// ρ(x, y) for arbitrary vectors.
  Matrix action(const Vector& x, const Vector& y) const;
  /// Matrix stored for the pair at this position of pair_basis(n).
  const Matrix& pair_action(std::size_t position) const { return rho_.at(position); }

  /// Sets ρ(e_i, e_j) for i != j; ρ(e_j, e_i) becomes its negative.
  void set_action(std::size_t i, std::size_t j, const Matrix& value);
  void set_d_M(Matrix d_M);

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Matrix> rho_;
  Matrix d_M_;
  Scalar lambda_;
};

inline constexpr std::string_view kRepBracketLaw = "rep_bracket_law";
inline constexpr std::string_view kRepCommutatorLaw = "rep_commutator_law";
inline constexpr std::string_view kRepDifferentialLaw = "rep_differential_law";

/// Checks, on basis tuples,
///   ρ([a1,a2,a3],a4) = ρ(a2,a3)ρ(a1,a4) + ρ(a3,a1)ρ(a2,a4) + ρ(a1,a2)ρ(a3,a4),
///   ρ(a1,a2)ρ(a3,a4) = ρ(a3,a4)ρ(a1,a2) + ρ([a1,a2,a3],a4) + ρ(a3,[a1,a2,a4]),
///   d_M ρ(a,b) = ρ(da,b) + ρ(a,db) + ρ(a,b) d_M + λ ρ(a,b).
/// The last law is reported column by column (args: i, j, module index).
/// Throws InputError when shapes or λ disagree with md.
VerificationReport verify_representation(const MD3LieAlgebra& md, const Representation& rep);

/// ρ(e_i, e_j) = [e_i, e_j, -] on A itself with d_M = d.
Representation adjoint_representation(const MD3LieAlgebra& md);

/// ρ* = -ρᵀ on the dual module with module operator -d_Mᵀ, in the dual basis.
Representation dual_representation(const Representation& rep);

/// Zero action on k^m with the given module operator.
Representation trivial_representation(const MD3LieAlgebra& md, const Matrix& d_M);

/// A ⊕ M with [a1+u1, a2+u2, a3+u3] = [a1,a2,a3] + ρ(a1,a2)u3 + ρ(a3,a1)u2 + ρ(a2,a3)u1
/// and differential d ⊕ d_M. Basis: e_1..e_n of A followed by the module basis.
/// Built for any input; validity of the result mirrors validity of rep.
MD3LieAlgebra semidirect_product(const MD3LieAlgebra& md, const Representation& rep);

}  // namespace mdlie
