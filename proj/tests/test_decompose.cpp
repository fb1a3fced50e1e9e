#include <gtest/gtest.h>

#include "frameforge/constructions.hpp"
#include "frameforge/decompose.hpp"
#include "frameforge/random.hpp"

using namespace frameforge;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no frameforge::Error thrown";
  return ErrorCode::InvalidInput;
}

ComplexMatrix contraction(Rng& rng, Eigen::Index n, double lo, double hi) {
  RealVector sigma(n);
  for (Eigen::Index i = 0; i < n; ++i) sigma(i) = rng.uniform(lo, hi);
  return random_with_singular_values(rng, sigma);
}

}  // namespace

TEST(UnitarySplit, MeanOfTwoUnitaries) {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = rng.uniform_int(1, 12);
    const ComplexMatrix t = contraction(rng, n, 0.01, 1.0);
    const UnitarySplit s = unitary_split(t);
    EXPECT_LT(distance(0.5 * (s.u + s.v), t), 1e-12);
    EXPECT_LT(unitarity_defect(s.u), 1e-12);
    EXPECT_LT(unitarity_defect(s.v), 1e-12);
  }
}

TEST(UnitarySplit, UnitaryInputSplitsIntoItself) {
  Rng rng(22);
  const ComplexMatrix w = random_unitary(rng, 5);
  const UnitarySplit s = unitary_split(w);
  EXPECT_LT(distance(s.u, w), 1e-7);
  EXPECT_LT(distance(s.v, w), 1e-7);
}

TEST(UnitarySplit, Errors) {
  Rng rng(23);
  EXPECT_EQ(code_of([&] { unitary_split(2.0 * ComplexMatrix::Identity(3, 3)); }), ErrorCode::NormTooLarge);
  ComplexMatrix singular = ComplexMatrix::Identity(3, 3);
  singular(2, 2) = 0.0;
  EXPECT_EQ(code_of([&] { unitary_split(singular); }), ErrorCode::NotIsomorphism);
  EXPECT_EQ(code_of([&] { unitary_split(ComplexMatrix::Zero(2, 3)); }), ErrorCode::ShapeError);
}

TEST(UnitarySplit, NormJustAboveOneIsRescaled) {
  Rng rng(24);
  const ComplexMatrix t = (1.0 + 1e-12) * random_unitary(rng, 4);
  const UnitarySplit s = unitary_split(t);
  EXPECT_LT(unitarity_defect(s.u), 1e-10);
  EXPECT_LT(distance(0.5 * (s.u + s.v), t), 1e-10);
}

TEST(Casazza, IdentityGivesScaleFour) {
  const CasazzaDecomposition c = casazza_decompose(ComplexMatrix::Identity(3, 3), 0.5);
  EXPECT_DOUBLE_EQ(c.a, 4.0);
  EXPECT_LT(distance(c.a * (c.u + c.s), ComplexMatrix::Identity(3, 3)), 1e-12);
}

TEST(Casazza, ArbitraryOperators) {
  Rng rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = rng.uniform_int(1, 10);
    ComplexMatrix t = std::pow(10.0, rng.uniform(-4, 4)) * gaussian_matrix(rng, n, n);
    if (trial % 3 == 0 && n > 1) t.row(0).setZero();
    const double eps = rng.uniform(0.01, 0.99);
    const CasazzaDecomposition c = casazza_decompose(t, eps);
    const double norm = operator_norm(t);
    EXPECT_EQ(c.a, 2.0 * norm / (1.0 - eps));
    EXPECT_EQ(c.epsilon, eps);
    EXPECT_LT(distance(c.a * (c.u + c.s), t), 1e-12 * std::max(1.0, norm));
    EXPECT_LT(unitarity_defect(c.u), 1e-12);
    const RealVector sv = singular_values(c.s);
    EXPECT_GE(sv(sv.size() - 1), 0.5 - 1e-12);
    EXPECT_LE(sv(0), 2.5 + 1e-12);
  }
}

TEST(Casazza, ZeroOperatorIsDegenerate) {
  const CasazzaDecomposition c = casazza_decompose(ComplexMatrix::Zero(3, 3));
  EXPECT_EQ(c.a, 0.0);
  EXPECT_EQ(c.u, ComplexMatrix::Identity(3, 3));
  EXPECT_EQ(c.s, ComplexMatrix::Identity(3, 3));
}

TEST(Casazza, Errors) {
  EXPECT_EQ(code_of([] { casazza_decompose(ComplexMatrix::Identity(2, 2), 0.0); }), ErrorCode::InvalidEpsilon);
  EXPECT_EQ(code_of([] { casazza_decompose(ComplexMatrix::Identity(2, 2), 1.0); }), ErrorCode::InvalidEpsilon);
  EXPECT_EQ(code_of([] { casazza_decompose(ComplexMatrix::Zero(2, 3)); }), ErrorCode::ShapeError);
}

TEST(BesselToRiesz, RandomSquareSystems) {
  Rng rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = rng.uniform_int(1, 10);
    ComplexMatrix t = gaussian_matrix(rng, n, n);
    if (trial % 2 == 0) t.col(0).setZero();  // not a frame, still Bessel
    const Frame f(t);
    const RieszPair pair = bessel_to_riesz_pair(f);
    EXPECT_TRUE(is_riesz_basis(pair.y).is_riesz_basis);
    EXPECT_TRUE(is_riesz_basis(pair.z).is_riesz_basis);
    EXPECT_LT(distance(pair.y.synthesis() + pair.z.synthesis(), t), 1e-12 * std::max(1.0, pair.a));
    const ComplexMatrix& y = pair.y.synthesis();
    EXPECT_LT(distance(y.adjoint() * y, pair.a * pair.a * ComplexMatrix::Identity(n, n)),
              1e-12 * std::max(1.0, pair.a * pair.a));
  }
}

TEST(BesselToRiesz, EmptyHfModel) {
  const Frame model = empty_hf_operator_model(3, 20);
  const RieszPair pair = bessel_to_riesz_pair(model);
  EXPECT_TRUE(is_riesz_basis(pair.y).is_riesz_basis);
  EXPECT_TRUE(is_riesz_basis(pair.z).is_riesz_basis);
  EXPECT_LT(distance(pair.y.synthesis() + pair.z.synthesis(), model.synthesis()), 1e-12);
}

TEST(BesselToRiesz, ZeroFamilyAndShapeErrors) {
  const RieszPair pair = bessel_to_riesz_pair(Frame(ComplexMatrix::Zero(3, 3)));
  EXPECT_EQ(pair.a, 0.5);
  EXPECT_EQ(pair.y.synthesis(), 0.5 * ComplexMatrix::Identity(3, 3));
  EXPECT_EQ(pair.z.synthesis(), -0.5 * ComplexMatrix::Identity(3, 3));
  EXPECT_EQ(code_of([] { bessel_to_riesz_pair(Frame(ComplexMatrix::Ones(2, 3))); }), ErrorCode::ShapeError);
}
