#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "chtri/classify.hpp"
#include "chtri/heisenberg.hpp"
#include "chtri/triangle.hpp"
#include "test_util.hpp"

using namespace chtri;
constexpr double pi = std::numbers::pi;

TEST(Discriminant, Examples) {
  EXPECT_EQ(discriminant(3.0), 0.0);
  EXPECT_EQ(discriminant(0.0), -27.0);
  EXPECT_EQ(discriminant(-1.0), 0.0);
  // Three distinct rotation angles give a regular elliptic trace.
  const Complex t = std::polar(1.0, 0.3) + std::polar(1.0, 1.1) + std::polar(1.0, -1.4);
  EXPECT_LT(discriminant(t), 0.0);
}

TEST(Trace, Examples) {
  EXPECT_EQ(trace(GroupElement::identity()), Complex(3.0));
  EXPECT_EQ(trace(GroupElement(Eigen::Vector3cd(-1, 1, -1).asDiagonal().toDenseMatrix())), Complex(-1.0));
  for (int n = 3; n <= 12; ++n) {
    const TriangleGroup g = build_mn_inf(5, n, 0.7);
    EXPECT_LT(std::abs(trace(g.word("12")) - (2.0 * std::cos(2 * pi / n) + 1.0)), 1e-12) << n;
  }
}

TEST(CubicRoots, RecoversKnownRoots) {
  const Complex r1(1, 2), r2(-0.5, 0.1), r3(0.3, -1);
  const auto roots = cubic_roots(-(r1 + r2 + r3), r1 * r2 + r2 * r3 + r1 * r3, -r1 * r2 * r3);
  for (Complex r : {r1, r2, r3}) {
    double best = 1e9;
    for (Complex q : roots) best = std::min(best, std::abs(q - r));
    EXPECT_LT(best, 1e-12);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(GroupElement::identity()).kind, IsometryKind::identity);
  EXPECT_EQ(classify(GroupElement(Eigen::Vector3cd(-1, 1, -1).asDiagonal().toDenseMatrix())).kind,
            IsometryKind::boundary_elliptic);
  const TriangleGroup g4 = build_n_inf_inf(4, pi / 4);
  const IsometryClass c = classify(g4.word("123"));
  EXPECT_EQ(c.kind, IsometryKind::loxodromic);
  EXPECT_LT(std::abs(c.trace - Complex(-3, 4)), 1e-12);
  for (int n : {3, 4, 7, 12, 50}) {
    const double s = std::cos(pi / n);
    EXPECT_EQ(classify(build_n_inf_inf(n, std::acos(s)).word("3132")).kind, IsometryKind::unipotent_parabolic) << n;
  }
}

TEST(Classify, NonUnitaryThrows) {
  EXPECT_THROW(classify(GroupElement(Eigen::Vector3cd(2, 1, 1).asDiagonal().toDenseMatrix())), std::invalid_argument);
}

TEST(Classify, ParabolicFamilies) {
  EXPECT_EQ(classify(heisenberg_translation(Complex(0.4, -1.0), 0.3)).kind, IsometryKind::unipotent_parabolic);
  EXPECT_EQ(classify(heisenberg_translation(0.0, 2.0)).kind, IsometryKind::unipotent_parabolic);
  // Ellipto-parabolic: a rotation about the vertical axis composed with a vertical translation.
  const Eigen::Matrix3cd rot = Eigen::Vector3cd(std::polar(1.0, 0.9), 1, 1).asDiagonal().toDenseMatrix();
  EXPECT_EQ(classify(GroupElement(rot) * heisenberg_translation(0.0, 1.0)).kind, IsometryKind::parabolic);
}

TEST(Classify, LoxodromicDilation) {
  // Real dilation fixing 0 and infinity in the (z2, z3)-rotated frame.
  const double t = 0.8;
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
  m(1, 1) = std::cosh(t);
  m(1, 2) = std::sinh(t);
  m(2, 1) = std::sinh(t);
  m(2, 2) = std::cosh(t);
  const IsometryClass c = classify(GroupElement(m));
  EXPECT_EQ(c.kind, IsometryKind::loxodromic);
  EXPECT_GT(c.discriminant, 0.0);
}

TEST(Classify, RegularEllipticHasDistinctUnimodularEigenvalues) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> order(3, 40);
  std::uniform_real_distribution<double> angle(0.0, pi);
  int seen = 0;
  for (int i = 0; i < 50000 && seen < 100; ++i) {
    const TriangleGroup g = build_mn_inf(order(rng), order(rng), angle(rng));
    const IsometryClass c = classify(g.word("123"));
    if (c.kind != IsometryKind::regular_elliptic) continue;
    ++seen;
    for (int a = 0; a < 3; ++a) {
      EXPECT_NEAR(std::abs(c.eigenvalues[a]), 1.0, 1e-8);
      for (int b = a + 1; b < 3; ++b) EXPECT_GT(std::abs(c.eigenvalues[a] - c.eigenvalues[b]), 1e-8);
    }
  }
  EXPECT_EQ(seen, 100);
}

TEST(Classify, ConjugationAndCubeRootInvariance) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> order(3, 20);
  std::uniform_real_distribution<double> angle(0.0, pi);
  const Complex omega = std::polar(1.0, 2 * pi / 3);
  for (int i = 0; i < 100; ++i) {
    const TriangleGroup g = build_mn_inf(order(rng), order(rng), angle(rng));
    const GroupElement x = g.word(i % 2 ? "123" : "12");
    const IsometryKind k = classify(x).kind;
    const GroupElement h = chtri::testing::random_su21(rng);
    EXPECT_EQ(classify(h * x * h.form_inverse()).kind, k) << i;
    EXPECT_EQ(classify(omega * x).kind, k) << i;
  }
}

TEST(Classify, EllipticGeneratorHasOrderN) {
  for (int n = 3; n <= 12; ++n) {
    const GroupElement a = build_mn_inf(8, n, 1.0).word("12");
    EXPECT_TRUE(is_elliptic(classify(a).kind)) << n;
    EXPECT_TRUE(projectively_identity(a.pow(n), 1e-9)) << n;
    EXPECT_FALSE(projectively_identity(a.pow(n - 1), 1e-9)) << n;
  }
}
