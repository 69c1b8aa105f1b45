#include <gtest/gtest.h>

#include "generators.hpp"
#include "mdlie/catalog.hpp"
#include "mdlie/cohomology.hpp"
#include "mdlie/error.hpp"
#include "mdlie/linalg.hpp"
#include "oracles.hpp"

using namespace mdlie;

namespace {

ComplexAssembly example_adjoint() {
  const auto md = catalog::example_e_md();
  return ComplexAssembly(md, adjoint_representation(md));
}

TotalCochain degree_two(const Cochain& f, const Cochain& g) { return TotalCochain{2, f, g}; }

TotalCochain derivation_cocycle() {
  return degree_two(Cochain::zero(2, 3, 3), Cochain::from_linear_map(Matrix::diagonal({0, 1, -1})));
}

Vector random_combination(testkit::Rng& rng, const std::vector<Vector>& basis, std::size_t dim) {
  Vector v(dim);
  for (const auto& b : basis) axpy(v, rng.rational(), b);
  return v;
}

}  // namespace

TEST(ComplexAssembly, Shapes) {
  const auto cx = example_adjoint();
  EXPECT_EQ(cx.delta(1).rows(), 27u);
  EXPECT_EQ(cx.delta(1).cols(), 9u);
  EXPECT_EQ(cx.phi(1).rows(), 9u);
  EXPECT_EQ(cx.partial(1).rows(), 36u);
  EXPECT_EQ(cx.partial(1).cols(), 9u);
  EXPECT_EQ(cx.partial(2).rows(), 81u + 27u);
  EXPECT_EQ(cx.partial(2).cols(), 27u + 9u);
  EXPECT_EQ(cx.total_dim(1), 9u);
  EXPECT_EQ(cx.total_dim(3), 81u + 27u);
}

TEST(ComplexAssembly, RejectsMismatchedRepresentation) {
  const auto md = catalog::example_e_md();
  EXPECT_THROW(ComplexAssembly(md, Representation(3, 2, Matrix(2, 2), 0)), InputError);
  EXPECT_THROW(ComplexAssembly(md, Representation(2, 2, Matrix(2, 2), -5)), InputError);
}

TEST(ComplexAssembly, DegreeOneExamples) {
  const auto cx = example_adjoint();
  const auto derivation = Cochain::from_linear_map(Matrix::diagonal({0, 1, -1}));
  EXPECT_TRUE(cx.apply_delta(derivation).coords == zero_vector(27));
  EXPECT_TRUE(is_zero(cx.apply_phi(derivation).coords));

  const auto e12 = Cochain::from_linear_map(Matrix::elementary(3, 3, 0, 1));
  EXPECT_EQ(cx.apply_phi(e12), e12);
  EXPECT_TRUE(is_zero(cx.apply_phi(Cochain::from_linear_map(Matrix::identity(3))).coords));

  const auto image = cx.apply_partial(TotalCochain{1, e12, std::nullopt});
  EXPECT_EQ(image.degree, 2);
  ASSERT_TRUE(image.g);
  EXPECT_EQ(image.g->coords, Scalar(-1) * e12.coords);
}

TEST(ComplexAssembly, IdentitiesOnCorpus) {
  testkit::Rng rng(21);
  for (const auto& c : testkit::complex_corpus(rng)) {
    SCOPED_TRACE(c.name);
    const ComplexAssembly cx(c.md, c.rep);
    for (int q = 1; q <= 2; ++q) {
      EXPECT_TRUE((cx.delta(q + 1) * cx.delta(q)).is_zero()) << "q=" << q;
      EXPECT_EQ(cx.phi(q + 1) * cx.delta(q), cx.delta(q) * cx.phi(q)) << "q=" << q;
      EXPECT_TRUE((cx.partial(q + 1) * cx.partial(q)).is_zero()) << "q=" << q;
    }
  }
}

TEST(ComplexAssembly, CopiesShareCache) {
  const auto cx = example_adjoint();
  const auto copy = cx;
  EXPECT_EQ(&cx.partial(2), &copy.partial(2));
}

TEST(Cohomology, FirstDegreeOfExample) {
  const auto cx = example_adjoint();
  const auto dims = cohomology_dim(cx, 1, true);
  EXPECT_EQ(dims.cocycles, 2u);
  EXPECT_EQ(dims.coboundaries, 0u);
  EXPECT_EQ(dims.cohomology, 2u);
  ASSERT_EQ(dims.representatives.size(), 2u);
  for (const auto& r : dims.representatives) {
    EXPECT_TRUE(is_cocycle(cx, r).cocycle);
    // Cocycles are diagonal with F22 + F33 = 0.
    const Matrix F = r.f.as_linear_map();
    EXPECT_EQ(F(1, 1), -F(2, 2));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) EXPECT_EQ(sgn(F(i, j)), 0);
  }

  const Matrix conditions = testkit::oracle_h1_conditions(cx.algebra(), cx.representation());
  EXPECT_EQ(9u - testkit::oracle_rank(conditions), 2u);
}

TEST(Cohomology, FirstDegreeAgreesWithOracle) {
  testkit::Rng rng(22);
  for (const auto& c : testkit::complex_corpus(rng)) {
    SCOPED_TRACE(c.name);
    const ComplexAssembly cx(c.md, c.rep);
    const auto dims = cohomology_dim(cx, 1);
    const std::size_t unknowns = c.md.dim() * c.rep.module_dim();
    EXPECT_EQ(dims.cocycles, unknowns - testkit::oracle_rank(testkit::oracle_h1_conditions(c.md, c.rep)));
    EXPECT_EQ(dims.coboundaries, 0u);
  }
}

TEST(Cohomology, TrivialComplex) {
  const MD3LieAlgebra ab(ThreeLieAlgebra::abelian(2), Matrix(2, 2), 0);
  const ComplexAssembly cx(ab, trivial_representation(ab, Matrix(1, 1)));
  const auto dims = cohomology_dim(cx, 2, true);
  EXPECT_EQ(dims.cocycles, 4u);
  EXPECT_EQ(dims.coboundaries, 0u);
  EXPECT_EQ(dims.cohomology, 4u);
  EXPECT_EQ(dims.representatives.size(), 4u);
}

TEST(Cohomology, DimensionsAreConsistent) {
  testkit::Rng rng(23);
  for (const auto& c : testkit::complex_corpus(rng)) {
    SCOPED_TRACE(c.name);
    const ComplexAssembly cx(c.md, c.rep);
    for (int q = 1; q <= 3; ++q) {
      const auto dims = cohomology_dim(cx, q, true);
      EXPECT_LE(dims.coboundaries, dims.cocycles);
      EXPECT_EQ(dims.cocycles, cx.total_dim(q) - rank(cx.partial(q)));
      EXPECT_EQ(dims.coboundaries, q == 1 ? 0u : rank(cx.partial(q - 1)));
      EXPECT_EQ(dims.cohomology + dims.coboundaries, dims.cocycles);
      ASSERT_EQ(dims.representatives.size(), dims.cohomology);
      for (const auto& r : dims.representatives) {
        EXPECT_TRUE(is_cocycle(cx, r).cocycle);
        if (q >= 2) EXPECT_FALSE(is_coboundary(cx, r).has_value());
      }
    }
  }
}

TEST(Cocycles, DerivationCocycleIsNotExact) {
  const auto cx = example_adjoint();
  const auto c = derivation_cocycle();
  const auto check = is_cocycle(cx, c);
  EXPECT_TRUE(check.cocycle);
  EXPECT_TRUE(is_zero(check.residual.coords()));
  EXPECT_TRUE(satisfies_2cocycle_conditions(cx.algebra(), cx.representation(), c.f, *c.g));
  EXPECT_FALSE(is_coboundary(cx, c).has_value());

  const auto off = degree_two(Cochain::zero(2, 3, 3), Cochain::from_linear_map(Matrix::elementary(3, 3, 1, 0)));
  const auto bad = is_cocycle(cx, off);
  EXPECT_FALSE(bad.cocycle);
  EXPECT_FALSE(is_zero(bad.residual.coords()));
}

TEST(Cocycles, CoboundaryPreimages) {
  testkit::Rng rng(24);
  for (const auto& c : testkit::complex_corpus(rng)) {
    SCOPED_TRACE(c.name);
    const ComplexAssembly cx(c.md, c.rep);
    const std::size_t n = c.md.dim(), m = c.rep.module_dim();
    const auto source = TotalCochain::from_coords(1, n, m, rng.vector(cx.total_dim(1)));
    const auto image = cx.apply_partial(source);
    EXPECT_TRUE(is_cocycle(cx, image).cocycle);
    const auto pre = is_coboundary(cx, image);
    ASSERT_TRUE(pre.has_value());
    EXPECT_EQ(cx.apply_partial(*pre), image);
  }
  EXPECT_THROW(is_coboundary(example_adjoint(), TotalCochain::zero(1, 3, 3)), InputError);
}

TEST(Cocycles, DirectConditionsAgreeWithAssembledMatrices) {
  testkit::Rng rng(25);
  for (const auto& c : testkit::complex_corpus(rng)) {
    SCOPED_TRACE(c.name);
    const ComplexAssembly cx(c.md, c.rep);
    const std::size_t n = c.md.dim(), m = c.rep.module_dim();
    const auto z1 = kernel_basis(cx.partial(1));
    const auto z2 = kernel_basis(cx.partial(2));
    for (int trial = 0; trial < 6; ++trial) {
      Vector v1 = random_combination(rng, z1, cx.total_dim(1));
      Vector v2 = random_combination(rng, z2, cx.total_dim(2));
      if (trial % 2 == 1) {
        v1[rng.index(v1.size())] += 1;
        v2[rng.index(v2.size())] += 1;
      }
      const auto t1 = TotalCochain::from_coords(1, n, m, v1);
      const auto t2 = TotalCochain::from_coords(2, n, m, v2);
      EXPECT_EQ(is_cocycle(cx, t1).cocycle, satisfies_1cocycle_conditions(c.md, c.rep, t1.f));
      EXPECT_EQ(is_cocycle(cx, t2).cocycle, satisfies_2cocycle_conditions(c.md, c.rep, t2.f, *t2.g));
    }
  }
}

TEST(Cocycles, ShapeMismatchThrows) {
  const auto cx = example_adjoint();
  EXPECT_THROW(is_cocycle(cx, TotalCochain::zero(2, 3, 2)), InputError);
}
