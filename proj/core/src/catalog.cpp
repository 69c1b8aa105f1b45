#include "mdlie/catalog.hpp"

#include "mdlie/error.hpp"

namespace mdlie::catalog {

ThreeLieAlgebra det_bracket_algebra(const Vector& w) {
  if (w.size() != 3) throw InputError("det bracket needs a vector in dimension 3");
  SkewTernaryTensor t(3, 3);
  t.set(0, 1, 2, w);
  return ThreeLieAlgebra(std::move(t));
}

ThreeLieAlgebra example_e() { return det_bracket_algebra(unit_vector(3, 0)); }

MD3LieAlgebra example_e_md() { return MD3LieAlgebra(example_e(), Matrix::diagonal({1, 2, 3}), -5); }

MD3LieAlgebra example_e_family(const Scalar& k11, const Scalar& k12, const Scalar& k13, const Scalar& k22,
                               const Scalar& k23, const Scalar& k32, const Scalar& k33) {
  Matrix d{{k11, k12, k13}, {0, k22, k23}, {0, k32, k33}};
  return MD3LieAlgebra(example_e(), std::move(d), -(k22 + k33));
}

ThreeLieAlgebra simple_a4() {
  SkewTernaryTensor t(4, 4);
  // ε_{ijkl} with l the missing index; the sign is the parity of (i, j, k, l).
  t.set(0, 1, 2, unit_vector(4, 3));
  t.set(0, 1, 3, -unit_vector(4, 2));
  t.set(0, 2, 3, unit_vector(4, 1));
  t.set(1, 2, 3, -unit_vector(4, 0));
  return ThreeLieAlgebra(std::move(t));
}

}  // namespace mdlie::catalog
