#include <gtest/gtest.h>

#include <limits>

#include "frameforge/linalg.hpp"
#include "frameforge/random.hpp"
#include "oracles.hpp"

using namespace frameforge;

namespace {

ComplexMatrix hermitian_with_eigenvalues(Rng& rng, const RealVector& lambda) {
  const ComplexMatrix u = random_unitary(rng, lambda.size());
  return u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
}

}  // namespace

TEST(Linalg, SvdReconstructsAndOrdersSingularValues) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix t = gaussian_matrix(rng, rng.uniform_int(1, 12), rng.uniform_int(1, 12));
    const SpectralFactorization f = svd(t);
    ComplexMatrix sigma = ComplexMatrix::Zero(t.rows(), t.cols());
    for (Eigen::Index i = 0; i < f.singular_values.size(); ++i) sigma(i, i) = f.singular_values(i);
    EXPECT_LT((f.left * sigma * f.right.adjoint() - t).norm(), 1e-12 * std::max(1.0, t.norm()));
    EXPECT_LT(unitarity_defect(f.left), 1e-12);
    EXPECT_LT(unitarity_defect(f.right), 1e-12);
    for (Eigen::Index i = 1; i < f.singular_values.size(); ++i) {
      EXPECT_GE(f.singular_values(i - 1), f.singular_values(i));
    }
  }
}

TEST(Linalg, OperatorNormMatchesPowerIteration) {
  Rng rng(2);
  const ComplexMatrix t = gaussian_matrix(rng, 7, 5);
  const double expected = std::sqrt(oracle::top_eigenvalue(t.adjoint() * t));
  EXPECT_NEAR(operator_norm(t), expected, 1e-10);
}

TEST(Linalg, PolarDecompositionIncludingRankDeficient) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(1, 10);
    ComplexMatrix t = gaussian_matrix(rng, n, n);
    if (trial % 2 == 1 && n > 1) t = gaussian_matrix(rng, n, n - 1) * gaussian_matrix(rng, n - 1, n);
    if (trial == 0) t.setZero();
    const PolarDecomposition p = polar_decompose(t);
    EXPECT_LT(unitarity_defect(p.unitary), 1e-12);
    EXPECT_LT(hermitian_defect(p.positive), 1e-12);
    EXPECT_LT(distance(p.unitary * p.positive, t), 1e-12 * std::max(1.0, operator_norm(t)));
    EXPECT_LT(distance(p.positive * p.positive, t.adjoint() * t), 1e-11 * std::max(1.0, t.squaredNorm()));
  }
}

TEST(Linalg, PsdSqrtSquaresBack) {
  Rng rng(4);
  RealVector lambda(6);
  lambda << 0.0, 1e-3, 0.5, 1.0, 4.0, 9.0;
  const ComplexMatrix h = hermitian_with_eigenvalues(rng, lambda);
  const ComplexMatrix r = psd_sqrt(h);
  EXPECT_LT(hermitian_defect(r), 1e-12);
  EXPECT_LT(distance(r * r, h), 1e-12);
}

TEST(Linalg, PsdSqrtClampsRoundingNegatives) {
  Rng rng(5);
  RealVector lambda(3);
  lambda << -1e-13, 1.0, 2.0;
  const ComplexMatrix r = psd_sqrt(hermitian_with_eigenvalues(rng, lambda));
  EXPECT_TRUE(all_finite(r));
}

TEST(Linalg, PsdSqrtRejectsIndefiniteAndNonHermitian) {
  Rng rng(6);
  RealVector lambda(3);
  lambda << -0.5, 1.0, 2.0;
  try {
    psd_sqrt(hermitian_with_eigenvalues(rng, lambda));
    FAIL() << "expected NotPSD";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPSD);
  }
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = 1.0;
  try {
    psd_sqrt(m);
    FAIL() << "expected NotHermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
  }
}

TEST(Linalg, PdInvSqrt) {
  Rng rng(7);
  RealVector lambda(4);
  lambda << 0.25, 1.0, 2.0, 16.0;
  const ComplexMatrix s = hermitian_with_eigenvalues(rng, lambda);
  const ComplexMatrix r = pd_inv_sqrt(s);
  EXPECT_LT(distance(r * s * r, ComplexMatrix::Identity(4, 4)), 1e-12);

  lambda << 0.0, 1.0, 2.0, 3.0;
  try {
    pd_inv_sqrt(hermitian_with_eigenvalues(rng, lambda));
    FAIL() << "expected SingularOperator";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularOperator);
  }
}

TEST(Linalg, InvertibilityMargin) {
  RealVector sigma(3);
  sigma << 3.0, 2.0, 0.125;
  Rng rng(8);
  EXPECT_NEAR(invertibility_margin(random_with_singular_values(rng, sigma)), 0.125, 1e-13);
}

TEST(Linalg, RejectsNonFiniteAndEmpty) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(1, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_FALSE(all_finite(m));
  EXPECT_THROW(require_finite(m, "m"), Error);
  EXPECT_THROW(operator_norm(ComplexMatrix(0, 0)), Error);
  EXPECT_THROW(distance(ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3)), Error);
}

TEST(Linalg, TolerancePolicyValidation) {
  TolerancePolicy tol;
  EXPECT_NO_THROW(validate(tol));
  EXPECT_DOUBLE_EQ(tol.rank_tol(0.5), 1e-12);
  EXPECT_DOUBLE_EQ(tol.rank_tol(100.0), 1e-10);
  tol.identity_tol = 0.0;
  EXPECT_THROW(validate(tol), Error);
  tol.identity_tol = std::numeric_limits<double>::infinity();
  EXPECT_THROW(validate(tol), Error);
}

TEST(Random, SeedsAreReproducibleAndDerivedStreamsDiffer) {
  Rng a(42), b(42);
  EXPECT_EQ(gaussian_matrix(a, 3, 3), gaussian_matrix(b, 3, 3));
  EXPECT_NE(Rng::derive(42, 1), Rng::derive(42, 2));
  EXPECT_EQ(Rng::derive(42, 1), Rng::derive(42, 1));
}

TEST(Random, HaarUnitaryAndPrescribedSingularValues) {
  Rng rng(9);
  EXPECT_LT(unitarity_defect(random_unitary(rng, 16)), 1e-13);
  RealVector sigma(4);
  sigma << 0.5, 3.0, 1.0, 2.0;
  const RealVector got = singular_values(random_with_singular_values(rng, sigma));
  EXPECT_NEAR(got(0), 3.0, 1e-13);
  EXPECT_NEAR(got(3), 0.5, 1e-13);
  EXPECT_NEAR(random_unit_vector(rng, 5).norm(), 1.0, 1e-15);
}
