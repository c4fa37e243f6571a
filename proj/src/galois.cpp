#include "chtri/galois.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "chtri/classify.hpp"
#include "chtri/parallel.hpp"

namespace chtri {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t l) {
  const std::int64_t r = a % l;
  return r < 0 ? r + l : r;
}

std::int64_t gcd4(std::int64_t l, std::int64_t a, std::int64_t b, std::int64_t c) {
  return std::gcd(std::gcd(l, a), std::gcd(b, c));
}

}  // namespace

CandidateTrace canonicalize(std::int64_t l, std::int64_t k1, std::int64_t k2, std::int64_t k3) {
  if (l < 1) throw std::invalid_argument("canonicalize: l must be positive");
  std::array<std::int64_t, 3> k{mod(k1, l), mod(k2, l), mod(k3, l)};
  if (mod(k[0] + k[1] + k[2], l) != 0) throw std::invalid_argument("canonicalize: k1 + k2 + k3 must vanish mod l");
  std::sort(k.begin(), k.end());
  const std::int64_t g = gcd4(l, k[0], k[1], k[2]);
  return {l / g, k[0] / g, k[1] / g, k[2] / g};
}

bool is_canonical(const CandidateTrace& c) {
  return c.l >= 1 && 0 <= c.k1 && c.k1 <= c.k2 && c.k2 <= c.k3 && c.k3 < c.l && mod(c.k1 + c.k2 + c.k3, c.l) == 0 &&
         gcd4(c.l, c.k1, c.k2, c.k3) == 1;
}

Complex candidate_value(const CandidateTrace& c) {
  Complex sum{};
  for (std::int64_t k : {c.k1, c.k2, c.k3}) sum += CyclotomicInt::root_of_unity(c.l, k).evaluate();
  return sum;
}

CyclotomicInt candidate_exact(const CandidateTrace& c, std::int64_t modulus) {
  if (modulus % c.l != 0) throw std::invalid_argument("candidate_exact: l must divide the modulus");
  const std::int64_t step = modulus / c.l;
  CyclotomicInt x(modulus);
  for (std::int64_t k : {c.k1, c.k2, c.k3}) x.add_term(k * step, 1);
  return x;
}

PhiInequality phi_inequality(std::int64_t l, std::int64_t k1, std::int64_t k2, std::int64_t k3) {
  if (l < 1) throw std::invalid_argument("phi_inequality: l must be positive");
  auto d = [l](std::int64_t k) { return static_cast<std::uint64_t>(l / std::gcd(mod(k, l), l)); };
  PhiInequality out{d(k1), d(k2), d(k3)};
  const std::uint64_t a = euler_phi(out.d1), b = euler_phi(out.d2), c = euler_phi(out.d3);
  out.sum = 1.0 / static_cast<double>(a) + 1.0 / static_cast<double>(b) + 1.0 / static_cast<double>(c);
  out.holds = b * c + a * c + a * b > a * b * c;
  return out;
}

double lemma32_bound(double s1, double s2) {
  const double d = std::abs(s1) - std::abs(s2);
  return -4.0 * d * d - 1.0;
}

double circle_residual(Complex tau, const VertexOrder& m, const VertexOrder& n) {
  const double s1 = n.cos_pi(), s2 = m.cos_pi();
  return std::abs(std::abs(tau + 4.0 * (s1 * s1 + s2 * s2) + 1.0) - 8.0 * s1 * s2);
}

bool circle_condition(Complex tau, const VertexOrder& m, const VertexOrder& n, double tol) {
  return circle_residual(tau, m, n) <= tol;
}

CyclotomicInt twice_cos_pi(const VertexOrder& p, std::int64_t modulus) {
  if (p.is_infinite()) return CyclotomicInt::from_integer(modulus, 2);
  return CyclotomicInt::twice_cos_pi_over(p.value(), modulus);
}

std::int64_t galois_modulus(std::int64_t l, const VertexOrder& m, const VertexOrder& n) {
  std::int64_t N = l;
  for (const VertexOrder* p : {&m, &n})
    if (!p->is_infinite()) N = std::lcm(N, 2 * static_cast<std::int64_t>(p->value()));
  return N;
}

GaloisCheck galois_check(const CandidateTrace& c, const VertexOrder& m, const VertexOrder& n,
                         std::int64_t modulus_cap) {
  GaloisCheck out;
  out.modulus = galois_modulus(c.l, m, n);
  if (out.modulus > modulus_cap) return out;
  out.checked = true;

  const std::int64_t N = out.modulus;
  const CyclotomicInt tau = candidate_exact(c, N);
  const CyclotomicInt x = twice_cos_pi(n, N), y = twice_cos_pi(m, N);
  const CyclotomicInt xx = x * x, yy = y * y, xy = x * y;

  out.max_conjugate_real = -std::numeric_limits<double>::infinity();
  out.max_circle_right = -std::numeric_limits<double>::infinity();
  out.max_lemma32_bound = -std::numeric_limits<double>::infinity();
  for (std::int64_t k : coprime_residues(N)) {
    ++out.automorphisms;
    const double re = tau.evaluate_conjugate(k).real();
    out.max_conjugate_real = std::max(out.max_conjugate_real, re);
    if (re >= -1.0 && !out.contradiction_k) out.contradiction_k = k;

    // (2s)^2 = 4s^2 and 2(2s1)(2s2) = 8 s1 s2 on the conjugates.
    const double right = -(xx.evaluate_conjugate(k).real() + yy.evaluate_conjugate(k).real() + 1.0) +
                         2.0 * std::abs(xy.evaluate_conjugate(k).real());
    out.max_circle_right = std::max(out.max_circle_right, right);
    const double s1 = 0.5 * x.evaluate_conjugate(k).real(), s2 = 0.5 * y.evaluate_conjugate(k).real();
    out.max_lemma32_bound = std::max(out.max_lemma32_bound, lemma32_bound(s1, s2));
  }
  return out;
}

RefutationReport refute_finite_order(const VertexOrder& m_in, const VertexOrder& n_in, const RefuteOptions& opts) {
  VertexOrder m = m_in, n = n_in;
  if (n.is_infinite()) std::swap(m, n);
  if (n.is_infinite()) throw std::invalid_argument("refute_finite_order: at most one order may be infinite");
  if (m == n) throw std::invalid_argument("refute_finite_order: requires m != n");
  if (n.value() < 3 || (!m.is_infinite() && m.value() < 3))
    throw std::invalid_argument("refute_finite_order: orders must be >= 3");
  if (opts.max_l < 1 || opts.max_l > 2000) throw std::invalid_argument("refute_finite_order: max_l must be in [1, 2000]");

  const auto start = std::chrono::steady_clock::now();

  struct PerL {
    std::uint64_t examined = 0;
    std::vector<CandidateDiagnostics> survivors, near_misses;
  };
  const auto L = static_cast<std::size_t>(opts.max_l);
  std::vector<PerL> per_l(L);

  auto work = [&](std::int64_t l) {
    PerL& slot = per_l[static_cast<std::size_t>(l - 1)];
    std::vector<Complex> root(static_cast<std::size_t>(l));
    for (std::int64_t k = 0; k < l; ++k) root[static_cast<std::size_t>(k)] = CyclotomicInt::root_of_unity(l, k).evaluate();
    for (std::int64_t k1 = 0; k1 < l; ++k1) {
      for (std::int64_t k2 = k1; k2 < l; ++k2) {
        const std::int64_t k3 = mod(-k1 - k2, l);
        if (k3 < k2 || gcd4(l, k1, k2, k3) != 1) continue;
        ++slot.examined;
        const Complex tau = root[static_cast<std::size_t>(k1)] + root[static_cast<std::size_t>(k2)] +
                            root[static_cast<std::size_t>(k3)];
        const double r = circle_residual(tau, m, n);
        if (r > opts.near_miss_tol) continue;
        CandidateDiagnostics d;
        d.candidate = {l, k1, k2, k3};
        d.tau = tau;
        d.discriminant = discriminant(tau);
        d.circle_residual = r;
        d.phi = phi_inequality(l, k1, k2, k3);
        d.galois = galois_check(d.candidate, m, n, opts.modulus_cap);
        const bool survivor = d.discriminant < -tol::discriminant && r <= opts.strict_tol;
        (survivor ? slot.survivors : slot.near_misses).push_back(std::move(d));
      }
    }
  };

  // Strided assignment keeps the quadratic per-l cost balanced across workers.
  const std::size_t workers = std::min<std::size_t>(thread_count(), L);
  if (workers <= 1) {
    for (std::int64_t l = 1; l <= opts.max_l; ++l) work(l);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t l = w + 1; l <= L; l += workers) work(static_cast<std::int64_t>(l));
      });
  }

  RefutationReport report;
  report.m = m;
  report.n = n;
  report.options = opts;
  for (PerL& slot : per_l) {
    report.candidates_examined += slot.examined;
    for (auto* list : {&slot.survivors, &slot.near_misses}) {
      auto& target = list == &slot.survivors ? report.survivors : report.near_misses;
      for (CandidateDiagnostics& d : *list) {
        if (!d.galois.checked) {
          report.unchecked_overflow.push_back(d.candidate);
        } else {
          report.lemma32_evaluations += d.galois.automorphisms;
          report.lemma32_max = std::max(report.lemma32_max, d.galois.max_circle_right);
          if (!(d.galois.max_circle_right < -1.0)) report.lemma32_spot_check = false;
        }
        target.push_back(std::move(d));
      }
    }
  }
  std::sort(report.unchecked_overflow.begin(), report.unchecked_overflow.end());
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace chtri
