#pragma once

#include <cstddef>

#include "mdlie/algebra.hpp"

namespace mdlie::catalog {

/// 3-dimensional algebra [x, y, z] = det(x, y, z) · w. Satisfies the
/// fundamental identity for every w.
ThreeLieAlgebra det_bracket_algebra(const Vector& w);

/// [e1, e2, e3] = e1, the det-bracket algebra with w = e1.
ThreeLieAlgebra example_e();

/// E with d = diag(1, 2, 3) at weight -5.
MD3LieAlgebra example_e_md();

/// E with the general upper-block differential
///   d = [[k11, k12, k13], [0, k22, k23], [0, k32, k33]]
/// at weight -(k22 + k33).
MD3LieAlgebra example_e_family(const Scalar& k11, const Scalar& k12, const Scalar& k13, const Scalar& k22,
                               const Scalar& k23, const Scalar& k32, const Scalar& k33);

/// The simple 4-dimensional algebra [e_i, e_j, e_k] = ε_{ijkl} e_l.
ThreeLieAlgebra simple_a4();

}  // namespace mdlie::catalog
