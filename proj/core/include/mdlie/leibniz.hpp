#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mdlie/algebra.hpp"
#include "mdlie/matrix.hpp"
#include "mdlie/report.hpp"

namespace mdlie {

/// Bilinear bracket and operator on the pair space ∧²A, both in the pair basis.
struct LeibnizData {
  std::size_t dim = 0;
  /// products[p * dim + q] = [P_p, P_q] for pair-basis elements P_p, P_q.
  std::vector<Vector> products;
  Matrix d_F;

  const Vector& product(std::size_t p, std::size_t q) const { return products.at(p * dim + q); }
  Vector operator()(const Vector& x, const Vector& y) const;
};

/// [a1∧a2, b1∧b2] = [a1,a2,b1]∧b2 + b1∧[a1,a2,b2] and
/// d_F(a∧b) = da∧b + a∧db + λ a∧b.
LeibnizData fundamental_leibniz(const MD3LieAlgebra& md);

inline constexpr std::string_view kLeibnizIdentity = "leibniz_identity";
inline constexpr std::string_view kLeibnizDerivation = "leibniz_derivation";

/// [X,[Y,Z]] = [[X,Y],Z] + [Y,[X,Z]] on pair-basis triples, and
/// d_F[X,Y] = [d_F X, Y] + [X, d_F Y].
VerificationReport verify_leibniz(const LeibnizData& data);

}  // namespace mdlie
