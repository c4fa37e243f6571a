#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "chtri/linalg.hpp"
#include "test_util.hpp"

using namespace chtri;
using chtri::testing::random_complex;
using chtri::testing::random_negative;
using chtri::testing::random_positive;
using chtri::testing::random_vector;

TEST(HermitianForm, BasisValues) {
  EXPECT_EQ(hermitian_form(CVector(0, 1, 0), CVector(0, 1, 0)), Complex(1.0));
  EXPECT_EQ(hermitian_form(CVector(0, 0, 1), CVector(0, 0, 1)), Complex(-1.0));
  EXPECT_EQ(hermitian_form(CVector(0, 1, -1), CVector(0, 1, -1)), Complex(0.0));
}

TEST(HermitianForm, SesquilinearAndHermitian) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const CVector z = random_vector(rng), w = random_vector(rng), x = random_vector(rng);
    const Complex c = random_complex(rng);
    EXPECT_LT(std::abs(hermitian_form(z, w) - std::conj(hermitian_form(w, z))), 1e-12);
    EXPECT_LT(std::abs(hermitian_form(c * z + x, w) - (c * hermitian_form(z, w) + hermitian_form(x, w))), 1e-11);
    EXPECT_LT(std::abs(hermitian_form(z, c * w) - std::conj(c) * hermitian_form(z, w)), 1e-11);
  }
}

TEST(VectorType, Examples) {
  EXPECT_EQ(vector_type(CVector(0, 0, 1)), VectorType::negative);
  EXPECT_EQ(vector_type(CVector(0, 1, -1)), VectorType::null);
  EXPECT_EQ(vector_type(CVector(1, -1, 1)), VectorType::positive);
  EXPECT_THROW(vector_type(CVector::Zero()), std::invalid_argument);
}

TEST(Bergman, Examples) {
  EXPECT_NEAR(bergman_distance(CVector(0, 0, 1), CVector(0, 0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(bergman_distance(CVector(0, 0, 1), CVector(0.6, 0, 1)), 2.0 * std::log(2.0), 1e-12);
  EXPECT_NEAR(bergman_distance(CVector(0, 0, 1), Complex(2, 1) * CVector(0, 0, 1)), 0.0, 1e-12);
  EXPECT_THROW(bergman_distance(CVector(0, 1, 0), CVector(0, 0, 1)), std::invalid_argument);
}

TEST(Bergman, SymmetricAndScaleInvariant) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const CVector x = random_negative(rng), y = random_negative(rng);
    const Complex c = random_complex(rng) + Complex(0.1, 0);
    const double d = bergman_distance(x, y);
    EXPECT_GE(d, 0.0);
    EXPECT_NEAR(d, bergman_distance(y, x), 1e-9 * (1 + d));
    EXPECT_NEAR(d, bergman_distance(c * x, y), 1e-9 * (1 + d));
  }
}

TEST(Psi, Examples) {
  EXPECT_TRUE(psi(HorosphericalPoint::infinity()).isApprox(CVector(0, -1, 1)));
  EXPECT_TRUE(psi({0.0, 0.0, 0.0}).isApprox(CVector(0, 0.5, 0.5)));
  EXPECT_TRUE(psi({0.0, 0.0, 1.0}).isApprox(CVector(0, 0, 1)));
}

TEST(Psi, TypeMatchesHeightAndRoundTrips) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 3.0), v(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const Complex xi = random_complex(rng);
    const double vv = v(rng), uu = u(rng);
    EXPECT_EQ(vector_type(psi({xi, vv, 0.0})), VectorType::null);
    EXPECT_EQ(vector_type(psi({xi, vv, uu})), VectorType::negative);
    const HorosphericalPoint back = horospherical_coordinates(Complex(0.3, -2) * psi({xi, vv, uu}));
    EXPECT_LT(std::abs(back.xi - xi), 1e-10);
    EXPECT_NEAR(back.v, vv, 1e-10);
    EXPECT_NEAR(back.u, uu, 1e-10);
  }
  EXPECT_TRUE(horospherical_coordinates(CVector(0, -2, 2)).at_infinity);
}

TEST(ChainPolar, Examples) {
  const double s = std::cos(std::numbers::pi / 3);
  EXPECT_TRUE(chain_polar(ZChain{s}).isApprox(CVector(1, -0.5, 0.5), 1e-14));
  EXPECT_TRUE(chain_polar(ZRChain{0, 1}).isApprox(CVector(0, 2, 0)));
  EXPECT_TRUE(projectively_equal(chain_polar(ZRChain{0, 1}), CVector(0, 1, 0)));
  EXPECT_TRUE(chain_polar(ZRChain{1, 1}).isApprox(CVector(0, Complex(2, 1), Complex(0, -1))));
  EXPECT_THROW(chain_polar(ZRChain{0, 0}), std::invalid_argument);
  EXPECT_THROW(chain_polar(ZRChain{0, -1}), std::invalid_argument);
  EXPECT_EQ(vector_type(chain_polar(ZRChain{2.5, 0.3})), VectorType::positive);
  EXPECT_EQ(vector_type(chain_polar(ZChain{Complex(0.3, 0.7)})), VectorType::positive);
}

TEST(Involution, DisplayedMatrices) {
  const GroupElement i1 = involution_from_polar(CVector(0, 1, 0));
  EXPECT_TRUE(i1.matrix().isApprox(Eigen::Vector3cd(-1, 1, -1).asDiagonal().toDenseMatrix()));

  const double s1 = std::cos(std::numbers::pi / 5);
  const GroupElement i2 = involution_from_polar(CVector(1, -s1, s1));
  Eigen::Matrix3cd expected;
  expected << 1, -2 * s1, -2 * s1, -2 * s1, 2 * s1 * s1 - 1, 2 * s1 * s1, 2 * s1, -2 * s1 * s1, -2 * s1 * s1 - 1;
  EXPECT_LT(max_entry_norm(i2.matrix() - expected), 1e-14);

  const Complex zbar = std::conj(std::cos(std::numbers::pi / 4) * std::polar(1.0, std::numbers::pi / 4));
  const GroupElement i3 = involution_from_polar(CVector(1, -zbar, zbar));
  EXPECT_LT(std::abs(i3(0, 0) - 1.0), 1e-14);
  EXPECT_LT(std::abs(i3(0, 1) - Complex(-1, -1)), 1e-14);
  EXPECT_LT(std::abs(i3(0, 2) - Complex(-1, -1)), 1e-14);
  EXPECT_THROW(involution_from_polar(CVector(0, 0, 1)), std::invalid_argument);
  EXPECT_THROW(involution_from_polar(CVector(0, 1, 1)), std::invalid_argument);
}

TEST(Involution, RandomPolarProperties) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const CVector p = random_positive(rng);
    const GroupElement g = involution_from_polar(p);
    EXPECT_TRUE(is_unitary_for_form(g));
    EXPECT_LT(std::abs(g.determinant() - 1.0), 1e-10);
    EXPECT_TRUE(projectively_identity(g * g));
    const CVector x = random_vector(rng), y = random_vector(rng);
    EXPECT_LT(std::abs(hermitian_form(g * x, g * y) - hermitian_form(x, y)), 1e-9 * (1 + x.squaredNorm() + y.squaredNorm()));
    // Points orthogonal to p are fixed (up to scale), p itself is negated.
    EXPECT_TRUE(projectively_equal(g * p, p));
  }
}

TEST(Unitary, Examples) {
  EXPECT_TRUE(is_unitary_for_form(GroupElement::identity()));
  EXPECT_TRUE(is_unitary_for_form(GroupElement(Eigen::Vector3cd(-1, 1, -1).asDiagonal().toDenseMatrix())));
  EXPECT_FALSE(is_unitary_for_form(GroupElement(Eigen::Vector3cd(2, 1, 1).asDiagonal().toDenseMatrix())));
}

TEST(GroupElement, InversesAndPowers) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const GroupElement g = chtri::testing::random_su21(rng);
    EXPECT_LT(chtri::testing::max_diff(g * g.form_inverse(), GroupElement::identity()), 1e-9);
    EXPECT_LT(chtri::testing::max_diff(g.pow(3), g * g * g), 1e-9 * (1 + max_entry_norm(g.pow(3).matrix())));
    EXPECT_TRUE(projectively_identity(g.pow(0)));
  }
}

TEST(Normalize, DeterminantOneWithPrincipalRoot) {
  const GroupElement g = Complex(0, 2) * GroupElement::identity();
  const GroupElement n = normalize_to_su21(g);
  EXPECT_LT(std::abs(n.determinant() - 1.0), 1e-12);
  EXPECT_TRUE(projectively_identity(n));
}
