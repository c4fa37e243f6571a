#pragma once

// Exact arithmetic in Z[w_N], w_N = exp(2 pi i / N), with Galois automorphisms
// sigma_k : w_N -> w_N^k.

#include <cstdint>
#include <map>
#include <vector>

#include "chtri/linalg.hpp"

namespace chtri {

/// Integer combination sum_j c[j] w_N^j with indices taken mod N, stored
/// sparsely. The representation is not reduced modulo the cyclotomic
/// polynomial, so two different term maps may denote the same algebraic integer.
class CyclotomicInt {
 public:
  /// Zero element of Z[w_N]. Throws std::invalid_argument for N < 1.
  explicit CyclotomicInt(std::int64_t modulus);

  static CyclotomicInt from_integer(std::int64_t modulus, std::int64_t value);
  /// w_N^j for any integer j.
  static CyclotomicInt root_of_unity(std::int64_t modulus, std::int64_t j);
  /// w_{2p} + w_{2p}^{-1} = 2cos(pi/p) inside Z[w_N]; requires 2p | N.
  static CyclotomicInt twice_cos_pi_over(std::int64_t p, std::int64_t modulus);

  std::int64_t modulus() const { return modulus_; }
  std::int64_t coefficient(std::int64_t j) const;
  /// Nonzero terms, exponent in [0, N) -> coefficient.
  const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }
  void add_term(std::int64_t j, std::int64_t c);

  /// sum_j c[j] exp(2 pi i j / N).
  Complex evaluate() const;
  /// Value of sigma_k(x) without forming it. Requires gcd(k, N) = 1.
  Complex evaluate_conjugate(std::int64_t k) const;

  /// Image in Z[w_M] under w_N = w_M^{M/N}; requires N | M.
  CyclotomicInt embed(std::int64_t modulus) const;
  /// Complex conjugation, i.e. sigma_{N-1}.
  CyclotomicInt conj() const;

  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(std::int64_t c);

  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
  friend CyclotomicInt operator*(std::int64_t c, CyclotomicInt a) { return a *= c; }

  /// Equality of representations (same modulus, same terms).
  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

 private:
  void require_same_modulus(const CyclotomicInt& o) const;
  std::int64_t index(std::int64_t j) const;

  std::int64_t modulus_;
  std::map<std::int64_t, std::int64_t> terms_;
};

/// sigma_k(w_N) = w_N^k. Throws std::invalid_argument unless gcd(k, N) = 1.
CyclotomicInt galois_apply(const CyclotomicInt& x, std::int64_t k);

/// Euler's totient. Throws std::invalid_argument for d = 0.
std::uint64_t euler_phi(std::uint64_t d);

/// Units of Z/NZ in increasing order, 1 <= k < N (just {1} for N = 1).
std::vector<std::int64_t> coprime_residues(std::int64_t modulus);

/// Sum of the primitive d-th roots of unity, as an element of Z[w_d].
CyclotomicInt primitive_root_sum(std::int64_t d);

}  // namespace chtri
