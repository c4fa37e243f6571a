#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "chtri/cyclotomic.hpp"

using namespace chtri;

namespace {

CyclotomicInt random_element(std::mt19937_64& rng, std::int64_t n, int terms = 6) {
  std::uniform_int_distribution<std::int64_t> idx(0, n - 1), coef(-5, 5);
  CyclotomicInt x(n);
  for (int i = 0; i < terms; ++i) x.add_term(idx(rng), coef(rng));
  return x;
}

int mobius(std::int64_t d) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    d /= p;
    if (d % p == 0) return 0;
    mu = -mu;
  }
  return d > 1 ? -mu : mu;
}

}  // namespace

TEST(CyclotomicInt, Construction) {
  EXPECT_THROW(CyclotomicInt(0), std::invalid_argument);
  const CyclotomicInt w = CyclotomicInt::root_of_unity(8, -1);
  EXPECT_EQ(w.coefficient(7), 1);
  EXPECT_EQ(w.terms().size(), 1u);
  EXPECT_LT(std::abs(w.evaluate() - std::polar(1.0, -std::numbers::pi / 4)), 1e-15);
  EXPECT_LT(std::abs(CyclotomicInt::from_integer(5, -3).evaluate() - Complex(-3)), 1e-15);
  EXPECT_NEAR(CyclotomicInt::twice_cos_pi_over(7, 14).evaluate().real(), 2 * std::cos(std::numbers::pi / 7), 1e-15);
  EXPECT_THROW(CyclotomicInt::twice_cos_pi_over(7, 21), std::invalid_argument);
}

TEST(CyclotomicInt, RingOperationsMatchEvaluation) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 120);
    const CyclotomicInt x = random_element(rng, n), y = random_element(rng, n);
    EXPECT_LT(std::abs((x + y).evaluate() - (x.evaluate() + y.evaluate())), 1e-12);
    EXPECT_LT(std::abs((x - y).evaluate() - (x.evaluate() - y.evaluate())), 1e-12);
    EXPECT_LT(std::abs((x * y).evaluate() - x.evaluate() * y.evaluate()), 1e-11);
    EXPECT_LT(std::abs((3 * x).evaluate() - 3.0 * x.evaluate()), 1e-12);
    EXPECT_LT(std::abs(x.conj().evaluate() - std::conj(x.evaluate())), 1e-12);
    EXPECT_LT(std::abs(x.embed(3 * n).evaluate() - x.evaluate()), 1e-12);
  }
  EXPECT_THROW(CyclotomicInt(4) + CyclotomicInt(5), std::invalid_argument);
  EXPECT_THROW(CyclotomicInt(4).embed(6), std::invalid_argument);
}

TEST(CyclotomicInt, EvaluationStableAtLargeModulus) {
  // |c|_1 = 100 at N = 10^4: compare against long double accumulation.
  std::mt19937_64 rng(67);
  const std::int64_t n = 10000;
  for (int t = 0; t < 20; ++t) {
    CyclotomicInt x(n);
    std::uniform_int_distribution<std::int64_t> idx(0, n - 1);
    for (int i = 0; i < 100; ++i) x.add_term(idx(rng), (rng() & 1) ? 1 : -1);
    long double re = 0, im = 0;
    for (const auto& [j, c] : x.terms()) {
      const long double ang = 2.0L * std::numbers::pi_v<long double> * j / n;
      re += c * std::cos(ang);
      im += c * std::sin(ang);
    }
    EXPECT_LT(std::abs(x.evaluate() - Complex(static_cast<double>(re), static_cast<double>(im))), 1e-12);
  }
}

TEST(Galois, Examples) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 100; ++i) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 100);
    const CyclotomicInt x = random_element(rng, n), y = random_element(rng, n);
    EXPECT_EQ(galois_apply(x, 1), x);
    EXPECT_LT(std::abs(galois_apply(x, n - 1).evaluate() - std::conj(x.evaluate())), 1e-12);
    const auto units = coprime_residues(n);
    const std::int64_t k = units[rng() % units.size()], k2 = units[rng() % units.size()];
    EXPECT_EQ(galois_apply(galois_apply(x, k2), k), galois_apply(x, (k * k2) % n));
    EXPECT_EQ(galois_apply(x * y, k), galois_apply(x, k) * galois_apply(y, k));
    EXPECT_EQ(galois_apply(x + y, k), galois_apply(x, k) + galois_apply(y, k));
    EXPECT_LT(std::abs(x.evaluate_conjugate(k) - galois_apply(x, k).evaluate()), 1e-12);
  }
  EXPECT_THROW(galois_apply(CyclotomicInt(12), 4), std::invalid_argument);
  EXPECT_THROW(CyclotomicInt(12).evaluate_conjugate(3), std::invalid_argument);
}

TEST(EulerPhi, Examples) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(12), 4u);
  EXPECT_EQ(euler_phi(210), 48u);
  EXPECT_EQ(euler_phi(97), 96u);
  EXPECT_THROW(euler_phi(0), std::invalid_argument);
  for (std::uint64_t d = 1; d <= 300; ++d) EXPECT_EQ(euler_phi(d), coprime_residues(static_cast<std::int64_t>(d)).size());
}

TEST(PrimitiveRootSum, IsMobius) {
  for (std::int64_t d = 1; d <= 100; ++d) {
    const Complex z = primitive_root_sum(d).evaluate();
    EXPECT_NEAR(z.real(), mobius(d), 1e-10) << d;
    EXPECT_NEAR(z.imag(), 0.0, 1e-10) << d;
  }
}
