#include "chtri/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace chtri {

namespace {

// exp(2 pi i j / N) with the angle folded into [-pi, pi].
Complex unit_root(std::int64_t j, std::int64_t n) {
  const std::int64_t jj = 2 * j > n ? j - n : j;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(jj) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

CyclotomicInt::CyclotomicInt(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 1) throw std::invalid_argument("CyclotomicInt: modulus must be positive");
}

CyclotomicInt CyclotomicInt::from_integer(std::int64_t modulus, std::int64_t value) {
  CyclotomicInt x(modulus);
  x.add_term(0, value);
  return x;
}

CyclotomicInt CyclotomicInt::root_of_unity(std::int64_t modulus, std::int64_t j) {
  CyclotomicInt x(modulus);
  x.add_term(j, 1);
  return x;
}

CyclotomicInt CyclotomicInt::twice_cos_pi_over(std::int64_t p, std::int64_t modulus) {
  if (p < 1 || modulus % (2 * p) != 0)
    throw std::invalid_argument("twice_cos_pi_over: 2p must divide the modulus");
  const std::int64_t step = modulus / (2 * p);
  return root_of_unity(modulus, step) + root_of_unity(modulus, -step);
}

std::int64_t CyclotomicInt::index(std::int64_t j) const {
  const std::int64_t r = j % modulus_;
  return r < 0 ? r + modulus_ : r;
}

std::int64_t CyclotomicInt::coefficient(std::int64_t j) const {
  const auto it = terms_.find(index(j));
  return it == terms_.end() ? 0 : it->second;
}

void CyclotomicInt::add_term(std::int64_t j, std::int64_t c) {
  if (c == 0) return;
  const std::int64_t i = index(j);
  auto [it, inserted] = terms_.try_emplace(i, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

Complex CyclotomicInt::evaluate() const {
  Complex sum{};
  for (const auto& [j, c] : terms_) sum += static_cast<double>(c) * unit_root(j, modulus_);
  return sum;
}

Complex CyclotomicInt::evaluate_conjugate(std::int64_t k) const {
  if (std::gcd(k, modulus_) != 1) throw std::invalid_argument("evaluate_conjugate: k must be coprime to the modulus");
  const std::int64_t kk = index(k);
  Complex sum{};
  for (const auto& [j, c] : terms_) sum += static_cast<double>(c) * unit_root((j * kk) % modulus_, modulus_);
  return sum;
}

CyclotomicInt CyclotomicInt::embed(std::int64_t modulus) const {
  if (modulus < 1 || modulus % modulus_ != 0)
    throw std::invalid_argument("CyclotomicInt::embed: target modulus must be a multiple");
  const std::int64_t step = modulus / modulus_;
  CyclotomicInt out(modulus);
  for (const auto& [j, c] : terms_) out.add_term(j * step, c);
  return out;
}

CyclotomicInt CyclotomicInt::conj() const {
  CyclotomicInt out(modulus_);
  for (const auto& [j, c] : terms_) out.add_term(-j, c);
  return out;
}

void CyclotomicInt::require_same_modulus(const CyclotomicInt& o) const {
  if (o.modulus_ != modulus_) throw std::invalid_argument("CyclotomicInt: modulus mismatch");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  require_same_modulus(o);
  for (const auto& [j, c] : o.terms_) add_term(j, c);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  require_same_modulus(o);
  for (const auto& [j, c] : o.terms_) add_term(j, -c);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) {
  require_same_modulus(o);
  CyclotomicInt prod(modulus_);
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : o.terms_) prod.add_term(i + j, a * b);
  terms_ = std::move(prod.terms_);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [j, x] : terms_) x *= c;
  return *this;
}

CyclotomicInt galois_apply(const CyclotomicInt& x, std::int64_t k) {
  const std::int64_t n = x.modulus();
  if (std::gcd(k, n) != 1) throw std::invalid_argument("galois_apply: k must be coprime to the modulus");
  const std::int64_t kk = ((k % n) + n) % n;
  CyclotomicInt out(n);
  for (const auto& [j, c] : x.terms()) out.add_term((j * kk) % n, c);
  return out;
}

std::uint64_t euler_phi(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("euler_phi: argument must be positive");
  std::uint64_t result = d;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

std::vector<std::int64_t> coprime_residues(std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("coprime_residues: modulus must be positive");
  if (modulus == 1) return {1};
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k < modulus; ++k)
    if (std::gcd(k, modulus) == 1) out.push_back(k);
  return out;
}

CyclotomicInt primitive_root_sum(std::int64_t d) {
  CyclotomicInt sum(d);
  for (std::int64_t k : coprime_residues(d)) sum.add_term(k, 1);
  return sum;
}

}  // namespace chtri
