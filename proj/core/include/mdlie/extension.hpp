#pragma once

#include <optional>
#include <string_view>

#include "mdlie/algebra.hpp"
#include "mdlie/cohomology.hpp"
#include "mdlie/matrix.hpp"
#include "mdlie/multilinear.hpp"
#include "mdlie/report.hpp"
#include "mdlie/representation.hpp"

namespace mdlie {

/// Extension 0 -> M -> total -> A -> 0 realised on a concrete carrier.
/// `module_d` is the operator on M (whose bracket is zero) and `f`, `g` are
/// the cocycle data the extension was built from, when known.
struct AbelianExtension {
  MD3LieAlgebra base;
  Matrix module_d;
  MD3LieAlgebra total;
  Matrix inclusion;   // (n+m) x m
  Matrix projection;  // n x (n+m)
  SkewTernaryTensor f;
  Matrix g;

  std::size_t module_dim() const noexcept { return module_d.rows(); }
};

/// Bracket [a1+u1, a2+u2, a3+u3] = [a1,a2,a3] + ρ(a2,a3)u1 + ρ(a3,a1)u2 + ρ(a1,a2)u3 + f(a1,a2,a3)
/// and operator (a, u) ↦ (da, d_M u + g a) on A ⊕ M, with the canonical
/// inclusion and projection. f is M-valued; g is an m x n matrix.
/// Always constructs; validity is decided by verify_abelian_extension.
AbelianExtension build_abelian_extension(const MD3LieAlgebra& md, const Representation& rep,
                                         const SkewTernaryTensor& f, const Matrix& g);

inline constexpr std::string_view kExtensionExactness = "extension_exactness";
inline constexpr std::string_view kExtensionWeight = "extension_weight";
inline constexpr std::string_view kExtensionAbelian = "extension_abelian";

/// The total algebra's fundamental identity and differential law, the
/// homomorphism conditions for both legs, exactness of the sequence and
/// [x, u, v] = 0 on the image of the inclusion. Exactness is one check whose
/// sides list p∘i, rank i, rank p and the total dimension.
VerificationReport verify_abelian_extension(const AbelianExtension& ext);

/// Data recovered from a section s of the projection
///   ϱ(a1,a2)u = [s a1, s a2, u],  υ = [s-,s-,s-] - s[-,-,-],  μ = d̂ s - s d,
/// read in M through the complement of s(A).
struct ExtractedCocycle {
  Representation rep;
  SkewTernaryTensor upsilon;
  Matrix mu;

  TotalCochain as_cochain() const;
};

/// Throws InputError unless projection * s = id.
ExtractedCocycle extract_cocycle(const AbelianExtension& ext, const Matrix& s);

/// A section with projection * s = id, found by solving column by column.
Matrix default_section(const AbelianExtension& ext);

struct EquivalenceWitness {
  Matrix eta;   // isomorphism ext1.total -> ext2.total
  Matrix iota;  // A -> M with cocycle1 - cocycle2 = ∂ι
};

/// Decides equivalence through the classes of the extracted cocycles. When
/// they agree, returns η = [s2 + i2 ι | i2] [s1 | i1]⁻¹, which restricts to
/// the identity on M and induces the identity on A. Throws InputError when
/// the two extensions do not share base algebra, module operator and
/// induced action.
std::optional<EquivalenceWitness> extensions_equivalent(const AbelianExtension& ext1, const AbelianExtension& ext2);

/// Whether eta is an isomorphism of the totals with eta i1 = i2 and p2 eta = p1.
bool is_extension_morphism(const Matrix& eta, const AbelianExtension& ext1, const AbelianExtension& ext2);

/// The abelian extension by the coadjoint representation together with the
/// pairing ϖ(a1+α1, a2+α2) = α1(a2) + α2(a1). f takes values in A* in dual
/// coordinates; column k of g is g(e_k) in A*.
struct TStarExtension {
  AbelianExtension extension;
  Matrix form;
};
TStarExtension tstar_extension(const MD3LieAlgebra& md, const SkewTernaryTensor& f, const Matrix& g);

inline constexpr std::string_view kFormSymmetric = "form_symmetric";
inline constexpr std::string_view kFormNondegenerate = "form_nondegenerate";
inline constexpr std::string_view kFormInvariant = "form_invariant";
inline constexpr std::string_view kFormDifferential = "form_differential";

/// B symmetric, of full rank, B([a1,a2,a3],a4) + B(a3,[a1,a2,a4]) = 0 and
/// B(da,b) + B(a,db) = 0, with B(x,y) = xᵀ B y.
VerificationReport is_metrised(const MD3LieAlgebra& md, const Matrix& B);

/// f(a1,a2,a3)(a4) + f(a1,a2,a4)(a3) = 0 and g(a1)(a2) + g(a2)(a1) = 0.
bool tstar_cyclicity_check(const SkewTernaryTensor& f, const Matrix& g);

}  // namespace mdlie
