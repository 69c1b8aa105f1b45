#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "mdlie/catalog.hpp"
#include "mdlie/error.hpp"
#include "mdlie/leibniz.hpp"
#include "mdlie/representation.hpp"
#include "oracles.hpp"

using namespace mdlie;

namespace {

bool has_witness(const VerificationReport& r, std::string_view law, const std::vector<std::size_t>& args) {
  return std::any_of(r.witnesses().begin(), r.witnesses().end(),
                     [&](const Violation& v) { return v.law == law && v.args == args; });
}

MD3LieAlgebra e_at_weight(const Scalar& lambda) {
  return MD3LieAlgebra(catalog::example_e(), Matrix::diagonal({1, 2, 3}), lambda);
}

}  // namespace

TEST(Verify3Lie, Examples) {
  EXPECT_TRUE(verify_3lie(ThreeLieAlgebra::abelian(4)).valid());
  EXPECT_TRUE(verify_3lie(catalog::example_e()).valid());
  EXPECT_TRUE(verify_3lie(catalog::simple_a4()).valid());

  SkewTernaryTensor t(4, 4);
  t.set(0, 1, 2, unit_vector(4, 0));
  t.set(0, 1, 3, unit_vector(4, 3));
  const auto report = verify_3lie(ThreeLieAlgebra(t));
  EXPECT_FALSE(report.valid());
  ASSERT_TRUE(has_witness(report, kFundamentalIdentity, {0, 1, 2, 3, 1}));
  for (const auto& w : report.witnesses())
    if (w.args == std::vector<std::size_t>{0, 1, 2, 3, 1}) {
      EXPECT_EQ(w.lhs, zero_vector(4));
      EXPECT_EQ(w.rhs, -unit_vector(4, 3));
    }
}

TEST(Verify3Lie, AgreesWithDenseOracle) {
  testkit::Rng rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const auto det = testkit::random_det_md(rng).algebra();
    EXPECT_TRUE(verify_3lie(det).valid());
    EXPECT_TRUE(testkit::oracle_fundamental_identity(det));
    // Sparse random brackets almost never satisfy the identity.
    const ThreeLieAlgebra rnd(rng.tensor(4, 4, 0.3, 2));
    EXPECT_EQ(verify_3lie(rnd).valid(), testkit::oracle_fundamental_identity(rnd));
  }
}

TEST(ModifiedDifferential, Examples) {
  EXPECT_TRUE(verify_modified_differential(catalog::example_e_md()).valid());
  testkit::Rng rng(2);
  EXPECT_TRUE(verify_modified_differential(testkit::random_abelian_md(rng, 3)).valid());

  const auto bad = verify_modified_differential(e_at_weight(0));
  ASSERT_FALSE(bad.valid());
  ASSERT_TRUE(has_witness(bad, kModifiedDifferentialLaw, {0, 1, 2}));
  EXPECT_EQ(bad.witnesses()[0].lhs, unit_vector(3, 0));
  EXPECT_EQ(bad.witnesses()[0].rhs, Scalar(6) * unit_vector(3, 0));
}

TEST(ModifiedDifferential, DerivationShift) {
  EXPECT_TRUE(derivation_shift_check(catalog::example_e_md()));
  EXPECT_TRUE(is_derivation(catalog::example_e(), Matrix::diagonal({Scalar(-3, 2), Scalar(-1, 2), Scalar(1, 2)})));
  EXPECT_FALSE(derivation_shift_check(e_at_weight(0)));
  testkit::Rng rng(4);
  EXPECT_TRUE(derivation_shift_check(testkit::random_abelian_md(rng, 3)));
}

TEST(ModifiedDifferential, ScalingLaws) {
  testkit::Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const auto md = testkit::random_det_md(rng);
    ASSERT_TRUE(verify_modified_differential(md).valid());
    const Scalar k = rng.rational();
    const MD3LieAlgebra scaled(md.algebra(), k * md.d(), k * md.lambda());
    EXPECT_TRUE(verify_modified_differential(scaled).valid());

    const auto rep = adjoint_representation(md);
    Representation scaled_rep(3, 3, k * rep.d_M(), k * md.lambda());
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) scaled_rep.set_action(i, j, rep.action(i, j));
    EXPECT_TRUE(verify_representation(scaled, scaled_rep).valid());

    // k·id is a modified (-2k)-differential and (M; ρ, id) represents it.
    const MD3LieAlgebra kid(md.algebra(), k * Matrix::identity(3), -2 * k);
    EXPECT_TRUE(verify_modified_differential(kid).valid());
    Representation id_rep(3, 3, Matrix::identity(3), -2 * k);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) id_rep.set_action(i, j, rep.action(i, j));
    EXPECT_TRUE(verify_representation(kid, id_rep).valid());
  }
}

TEST(Representation, AdjointOfExample) {
  const auto md = catalog::example_e_md();
  const auto ad = adjoint_representation(md);
  EXPECT_TRUE(verify_representation(md, ad).valid());
  EXPECT_EQ(ad.action(0, 1), Matrix::elementary(3, 3, 0, 2));  // e3 ↦ e1
  EXPECT_EQ(ad.action(1, 2), Matrix::elementary(3, 3, 0, 0));  // e1 ↦ e1
  EXPECT_EQ(ad.action(1, 0), -Matrix::elementary(3, 3, 0, 2));
  EXPECT_TRUE(adjoint_representation(MD3LieAlgebra(ThreeLieAlgebra::abelian(3), Matrix(3, 3), 0))
                  .action(0, 1)
                  .is_zero());
}

TEST(Representation, TrivialAndCorrupted) {
  const auto md = catalog::example_e_md();
  testkit::Rng rng(6);
  EXPECT_TRUE(verify_representation(md, trivial_representation(md, rng.matrix(2, 2))).valid());

  Representation bad = adjoint_representation(md);
  Matrix dM = bad.d_M();
  dM(1, 0) += 1;
  bad.set_d_M(dM);
  const auto report = verify_representation(md, bad);
  EXPECT_FALSE(report.valid());
  EXPECT_TRUE(report.failed(kRepDifferentialLaw));
  EXPECT_FALSE(report.failed(kRepBracketLaw));
  EXPECT_FALSE(report.failed(kRepCommutatorLaw));

  const Representation wrong_weight(3, 3, md.d(), 0);
  EXPECT_THROW(verify_representation(md, wrong_weight), InputError);
}

TEST(Representation, LawsAreIndependent) {
  // Scalar actions on an abelian algebra commute, so only the bracket law can break.
  const MD3LieAlgebra ab(ThreeLieAlgebra::abelian(4), Matrix(4, 4), 0);
  Representation scalar(4, 1, Matrix(1, 1), 0);
  scalar.set_action(0, 1, Matrix{{1}});
  scalar.set_action(2, 3, Matrix{{1}});
  const auto r1 = verify_representation(ab, scalar);
  EXPECT_TRUE(r1.failed(kRepBracketLaw));
  EXPECT_FALSE(r1.failed(kRepCommutatorLaw));
  EXPECT_FALSE(r1.failed(kRepDifferentialLaw));

  // [e1,e3,e4] = e1, [e2,e3,e4] = e2 with a projection on (e3,e4) and a
  // nilpotent action of (e1,e2): the bracket law holds, the commutator law does not.
  SkewTernaryTensor t(4, 4);
  t.set(0, 2, 3, unit_vector(4, 0));
  t.set(1, 2, 3, unit_vector(4, 1));
  const MD3LieAlgebra md(ThreeLieAlgebra(t), Matrix(4, 4), 0);
  ASSERT_TRUE(verify_3lie(md.algebra()).valid());
  Representation rep(4, 2, Matrix(2, 2), 0);
  rep.set_action(2, 3, Matrix::elementary(2, 2, 0, 0));
  rep.set_action(0, 1, Matrix::elementary(2, 2, 0, 1));
  const auto r2 = verify_representation(md, rep);
  EXPECT_FALSE(r2.failed(kRepBracketLaw));
  EXPECT_TRUE(r2.failed(kRepCommutatorLaw));
  EXPECT_FALSE(r2.failed(kRepDifferentialLaw));
  const auto sd = semidirect_product(md, rep);
  EXPECT_FALSE(verify_3lie(sd.algebra()).valid());

  rep.set_action(0, 1, Matrix(2, 2));
  EXPECT_TRUE(verify_representation(md, rep).valid());
  EXPECT_TRUE(verify_3lie(semidirect_product(md, rep).algebra()).valid());
}

TEST(Representation, Dual) {
  const auto md = catalog::example_e_md();
  const auto ad = adjoint_representation(md);
  const auto coad = dual_representation(ad);
  EXPECT_EQ(coad.action(0, 1), -Matrix::elementary(3, 3, 2, 0));
  EXPECT_EQ(coad.d_M(), -md.d().transpose());
  EXPECT_TRUE(verify_representation(md, coad).valid());
  EXPECT_EQ(dual_representation(coad), ad);
  const auto triv = trivial_representation(md, Matrix(2, 2));
  EXPECT_EQ(dual_representation(triv), triv);
}

TEST(Representation, DualOfRandomValid) {
  testkit::Rng rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const auto md = testkit::random_det_md(rng);
    EXPECT_TRUE(verify_representation(md, dual_representation(adjoint_representation(md))).valid());
  }
}

TEST(SemidirectProduct, Examples) {
  const auto md = catalog::example_e_md();
  const auto sd = semidirect_product(md, adjoint_representation(md));
  EXPECT_EQ(sd.dim(), 6u);
  EXPECT_TRUE(verify_3lie(sd.algebra()).valid());
  EXPECT_TRUE(verify_modified_differential(sd).valid());

  const MD3LieAlgebra ab(ThreeLieAlgebra::abelian(2), Matrix{{1, 2}, {3, 4}}, Scalar(1, 2));
  const auto sd2 = semidirect_product(ab, trivial_representation(ab, Matrix::identity(2)));
  EXPECT_TRUE(sd2.algebra().bracket().is_zero());
  EXPECT_TRUE(verify_modified_differential(sd2).valid());

  Representation bad = adjoint_representation(md);
  Matrix dM = bad.d_M();
  dM(1, 0) += 1;
  bad.set_d_M(dM);
  const auto sd3 = semidirect_product(md, bad);
  EXPECT_TRUE(verify_3lie(sd3.algebra()).valid());
  EXPECT_FALSE(verify_modified_differential(sd3).valid());
}

TEST(SemidirectProduct, BracketOnMixedArguments) {
  const auto md = catalog::example_e_md();
  const auto rep = adjoint_representation(md);
  const auto sd = semidirect_product(md, rep);
  testkit::Rng rng(1);
  const Vector a1 = rng.vector(3), a2 = rng.vector(3), a3 = rng.vector(3);
  const Vector u1 = rng.vector(3), u2 = rng.vector(3), u3 = rng.vector(3);
  auto join = [](const Vector& a, const Vector& u) {
    Vector v = a;
    v.insert(v.end(), u.begin(), u.end());
    return v;
  };
  Vector expect_u = rep.action(a1, a2).apply(u3) + rep.action(a3, a1).apply(u2) + rep.action(a2, a3).apply(u1);
  EXPECT_EQ(sd.algebra()(join(a1, u1), join(a2, u2), join(a3, u3)), join(md.algebra()(a1, a2, a3), expect_u));
}

TEST(Leibniz, Examples) {
  const auto md = catalog::example_e_md();
  const auto L = fundamental_leibniz(md);
  ASSERT_EQ(L.dim, 3u);
  EXPECT_EQ(L.product(0, 2), (Vector{-1, 0, 0}));  // [e1∧e2, e2∧e3] = -e1∧e2
  EXPECT_EQ(L.d_F.column(0), (Vector{-2, 0, 0}));
  EXPECT_TRUE(verify_leibniz(L).valid());

  const MD3LieAlgebra ab(ThreeLieAlgebra::abelian(3), Matrix::diagonal({1, 2, 3}), 5);
  const auto La = fundamental_leibniz(ab);
  for (const auto& p : La.products) EXPECT_TRUE(is_zero(p));
  EXPECT_EQ(La.d_F, Matrix::diagonal({8, 9, 10}));
}

TEST(Leibniz, RandomValidAlgebras) {
  testkit::Rng rng(12);
  for (int trial = 0; trial < 8; ++trial) EXPECT_TRUE(verify_leibniz(fundamental_leibniz(testkit::random_det_md(rng))).valid());
  const MD3LieAlgebra a4(catalog::simple_a4(),
                         Matrix{{-2, 1, 0, 0}, {-1, -2, 0, 0}, {0, 0, -2, 2}, {0, 0, -2, -2}}, 4);
  ASSERT_TRUE(verify_modified_differential(a4).valid());
  EXPECT_TRUE(verify_leibniz(fundamental_leibniz(a4)).valid());
}

TEST(Homomorphism, Examples) {
  const auto md = catalog::example_e_md();
  EXPECT_TRUE(homomorphism_check(Matrix::identity(3), md, md));
  EXPECT_TRUE(is_isomorphism(Matrix::identity(3), md, md));
  const MD3LieAlgebra other(ThreeLieAlgebra::abelian(2), Matrix(2, 2), 0);
  EXPECT_TRUE(homomorphism_check(Matrix(2, 3), md, other));
  EXPECT_FALSE(is_isomorphism(Matrix(3, 3), md, md));
  EXPECT_TRUE(homomorphism_check(Matrix::diagonal({2, 1, 1}), md, md));
  EXPECT_FALSE(homomorphism_check(Matrix::diagonal({1, 2, 1}), md, md));  // 2e1 on the right
  EXPECT_THROW(homomorphism_check(Matrix(3, 2), md, md), InputError);
}
