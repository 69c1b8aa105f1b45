#pragma once

#include <string>
#include <string_view>

#include "mdlie/algebra.hpp"
#include "mdlie/cohomology.hpp"
#include "mdlie/matrix.hpp"
#include "mdlie/multilinear.hpp"
#include "mdlie/report.hpp"
#include "mdlie/representation.hpp"

namespace mdlie {

/// ν_t = [-,-,-] + t ν1 + t² ν2 and d_t = d + t d1 on the carrier of `base`.
struct LinearDeformation {
  MD3LieAlgebra base;
  SkewTernaryTensor nu1;
  SkewTernaryTensor nu2;
  Matrix d1;

  /// ν1 = ν2 = 0, d1 = 0.
  static LinearDeformation zero(const MD3LieAlgebra& base);
};

/// Law name for the t^order coefficient of the fundamental identity of ν_t ("deformation_fi_t<k>")
/// or of the modified differential law of (ν_t, d_t) ("deformation_diff_t<k>").
std::string deformation_fi_law(int order);
std::string deformation_diff_law(int order);

/// Checks every t-coefficient: orders 0..4 of the fundamental identity and
/// orders 0..3 of the differential law. Throws InputError on shape mismatch.
VerificationReport verify_linear_deformation(const LinearDeformation& ld);

/// (ν1, d1) as a degree-2 cochain of the adjoint complex.
TotalCochain infinitesimal(const LinearDeformation& ld);

/// Law names for the t^order coefficient of either side of an equivalence
/// ("equivalence_diff_t<k>", "equivalence_bracket_t<k>").
std::string equivalence_diff_law(int order);
std::string equivalence_bracket_law(int order);

/// With N_t = id + tN: N_t d_t = d'_t N_t (t-orders 0..2) and
/// N_t ν_t(a,b,c) = ν'_t(N_t a, N_t b, N_t c) (t-orders 0..5), on basis tuples.
VerificationReport equivalence_report(const LinearDeformation& ld, const LinearDeformation& ld_prime, const Matrix& N);
bool check_equivalence(const LinearDeformation& ld, const LinearDeformation& ld_prime, const Matrix& N);

inline constexpr std::string_view kNijenhuisCommutes = "nijenhuis_commutes";
inline constexpr std::string_view kNijenhuisBracket = "nijenhuis_bracket";

/// N d = d N, and
/// [Na,Nb,Nc] = N([a,Nb,Nc] + [Na,b,Nc] + [Na,Nb,c]) - N²([Na,b,c] + [a,Nb,c] + [a,b,Nc]) + N³[a,b,c].
VerificationReport is_nijenhuis(const MD3LieAlgebra& md, const Matrix& N);

/// [a,b,c]_N = ([a,Nb,Nc] + [Na,b,Nc] + [Na,Nb,c]) - N([Na,b,c] + [a,Nb,c] + [a,b,Nc]) + N²[a,b,c]
/// with the same differential and weight. Throws InputError unless N is Nijenhuis.
MD3LieAlgebra nijenhuis_deformed_algebra(const MD3LieAlgebra& md, const Matrix& N);

/// ν1 = [Na,b,c] + [a,Nb,c] + [a,b,Nc] - N[a,b,c], ν2 = [Na,Nb,c] + [a,Nb,Nc] + [Na,b,Nc] - Nν1,
/// d1 = 0. Throws InputError unless N is Nijenhuis.
LinearDeformation trivial_deformation_from_nijenhuis(const MD3LieAlgebra& md, const Matrix& N);

inline constexpr std::string_view kOOperatorIntertwining = "o_operator_intertwining";
inline constexpr std::string_view kOOperatorBracket = "o_operator_bracket";

/// R: M -> A (an n x m matrix) with R d_M = d R and
/// [Rv1,Rv2,Rv3] = R(ρ(Rv1,Rv2)v3 + ρ(Rv2,Rv3)v1 + ρ(Rv3,Rv1)v2).
VerificationReport is_o_operator(const MD3LieAlgebra& md, const Representation& rep, const Matrix& R);

/// [[0, R], [0, 0]] on A ⊕ M.
Matrix o_operator_lift(const MD3LieAlgebra& md, const Representation& rep, const Matrix& R);

/// Whether R⁻¹ is a 1-cocycle with coefficients in rep. Throws InputError when R is singular.
bool inverse_cocycle_check(const MD3LieAlgebra& md, const Representation& rep, const Matrix& R);

}  // namespace mdlie
