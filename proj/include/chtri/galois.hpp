#pragma once

// Galois obstruction to I1 I2 I3 being regular elliptic of finite order:
// candidate traces tau = w_l^k1 + w_l^k2 + w_l^k3, the circle the trace must lie
// on, the real-part bound on conjugates, and a bounded refutation search.

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "chtri/cyclotomic.hpp"
#include "chtri/triangle.hpp"

namespace chtri {

/// (l; k1, k2, k3) with k1 + k2 + k3 = 0 mod l.
struct CandidateTrace {
  std::int64_t l = 1;
  std::int64_t k1 = 0, k2 = 0, k3 = 0;

  friend auto operator<=>(const CandidateTrace&, const CandidateTrace&) = default;
};

/// Reduces each k mod l, sorts, and divides out any common factor of l and
/// all k_i. Throws std::invalid_argument for l < 1 or a nonzero sum mod l.
CandidateTrace canonicalize(std::int64_t l, std::int64_t k1, std::int64_t k2, std::int64_t k3);
bool is_canonical(const CandidateTrace& c);

Complex candidate_value(const CandidateTrace& c);
/// The candidate as an element of Z[w_N]; requires l | N.
CyclotomicInt candidate_exact(const CandidateTrace& c, std::int64_t modulus);

struct PhiInequality {
  std::uint64_t d1 = 1, d2 = 1, d3 = 1;
  double sum = 0.0;  // 1/phi(d1) + 1/phi(d2) + 1/phi(d3)
  bool holds = false;
};

/// d_i = l / gcd(k_i, l); holds iff sum 1/phi(d_i) > 1 (decided in integers).
PhiInequality phi_inequality(std::int64_t l, std::int64_t k1, std::int64_t k2, std::int64_t k3);

/// Rightmost real part of the circle on which a conjugate trace lies:
/// -4(|s1| - |s2|)^2 - 1.
double lemma32_bound(double s1, double s2);

/// Signed distance | |tau + 4(s1^2 + s2^2) + 1| - 8 s1 s2 | with s = cos(pi/order).
double circle_residual(Complex tau, const VertexOrder& m, const VertexOrder& n);
bool circle_condition(Complex tau, const VertexOrder& m, const VertexOrder& n, double tol);

/// 2cos(pi/p) in Z[w_N] (the integer 2 for p = inf); requires 2p | N.
CyclotomicInt twice_cos_pi(const VertexOrder& p, std::int64_t modulus);

/// lcm(l, 2m, 2n), skipping infinite orders.
std::int64_t galois_modulus(std::int64_t l, const VertexOrder& m, const VertexOrder& n);

struct GaloisCheck {
  std::int64_t modulus = 0;
  bool checked = false;  // false when the modulus exceeds the cap
  std::size_t automorphisms = 0;
  /// max over k of Re sigma_k(tau), and the first k attaining Re >= -1.
  double max_conjugate_real = 0.0;
  std::optional<std::int64_t> contradiction_k;
  /// max over k of exact -(4(s1'^2 + s2'^2) + 1) + |8 s1' s2'|.
  double max_circle_right = 0.0;
  /// max over k of lemma32_bound on the numerically conjugated s.
  double max_lemma32_bound = 0.0;
};

/// Runs every sigma_k, k coprime to N = galois_modulus(l, m, n).
GaloisCheck galois_check(const CandidateTrace& c, const VertexOrder& m, const VertexOrder& n, std::int64_t modulus_cap);

struct CandidateDiagnostics {
  CandidateTrace candidate;
  Complex tau{};
  double discriminant = 0.0;
  double circle_residual = 0.0;
  PhiInequality phi;
  GaloisCheck galois;
};

struct RefuteOptions {
  std::int64_t max_l = 60;
  double strict_tol = 1e-8;
  double near_miss_tol = 1e-3;
  std::int64_t modulus_cap = 1'000'000;
};

struct RefutationReport {
  VertexOrder m = VertexOrder::infinity();
  VertexOrder n = VertexOrder::infinity();
  RefuteOptions options;
  std::uint64_t candidates_examined = 0;
  /// f(tau) < -eps and on the circle at strict_tol.
  std::vector<CandidateDiagnostics> survivors;
  /// On the circle at near_miss_tol but not survivors.
  std::vector<CandidateDiagnostics> near_misses;
  /// Survivors and near misses whose modulus exceeded the cap.
  std::vector<CandidateTrace> unchecked_overflow;
  /// Every sigma_k of every checked near miss or survivor gave a circle right end < -1.
  bool lemma32_spot_check = true;
  std::size_t lemma32_evaluations = 0;
  double lemma32_max = -std::numeric_limits<double>::infinity();
  double runtime_seconds = 0.0;
};

/// Enumerates canonical candidates with l <= max_l. Requires m != n, n finite
/// (>= 3), m finite (>= 3) or infinite, and max_l in [1, 2000]; the two orders
/// are swapped when only n is infinite. Throws std::invalid_argument otherwise.
RefutationReport refute_finite_order(const VertexOrder& m, const VertexOrder& n, const RefuteOptions& opts = {});

}  // namespace chtri
