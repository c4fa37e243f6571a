#pragma once

#include <cmath>
#include <random>

#include "chtri/heisenberg.hpp"
#include "chtri/linalg.hpp"

namespace chtri::testing {

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  return {g(rng), g(rng)};
}

inline CVector random_vector(std::mt19937_64& rng) {
  return CVector(random_complex(rng), random_complex(rng), random_complex(rng));
}

inline CVector random_negative(std::mt19937_64& rng) {
  CVector z = random_vector(rng);
  z(2) = std::polar(1.0 + std::abs(z(0)) + std::abs(z(1)), std::arg(z(2)) + 0.1);
  return z;
}

inline CVector random_positive(std::mt19937_64& rng) {
  CVector z = random_vector(rng);
  z(0) = std::polar(1.0 + std::abs(z(2)), std::arg(z(0)) + 0.1);
  return z;
}

/// Random element of SU(2,1) built from complex reflections and Heisenberg translations.
inline GroupElement random_su21(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  GroupElement g = involution_from_polar(random_positive(rng));
  g = g * heisenberg_translation(random_complex(rng), u(rng));
  g = g * involution_from_polar(random_positive(rng));
  return normalize_to_su21(g);
}

inline double max_diff(const GroupElement& a, const GroupElement& b) {
  return max_entry_norm(a.matrix() - b.matrix());
}

}  // namespace chtri::testing
