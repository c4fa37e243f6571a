#pragma once

#include <array>
#include <string_view>

#include "chtri/linalg.hpp"

namespace chtri {

enum class IsometryKind {
  identity,
  regular_elliptic,
  boundary_elliptic,
  unipotent_parabolic,
  parabolic,
  loxodromic,
};

std::string_view to_string(IsometryKind k);

inline bool is_elliptic(IsometryKind k) {
  return k == IsometryKind::regular_elliptic || k == IsometryKind::boundary_elliptic;
}

inline bool is_parabolic(IsometryKind k) {
  return k == IsometryKind::unipotent_parabolic || k == IsometryKind::parabolic;
}

struct IsometryClass {
  IsometryKind kind = IsometryKind::identity;
  Complex trace{};
  double discriminant = 0.0;
  std::array<Complex, 3> eigenvalues{};
};

/// f(z) = |z|^4 - 8 Re(z^3) + 18 |z|^2 - 27.
double discriminant(Complex z);

Complex trace(const GroupElement& m);

/// Roots of z^3 + b z^2 + c z + d, by Cardano with a Newton polish.
std::array<Complex, 3> cubic_roots(Complex b, Complex c, Complex d);

/// Eigenvalues from the characteristic cubic.
std::array<Complex, 3> eigenvalues(const GroupElement& m);

/// Trace-and-eigenstructure classification. The input must preserve the form;
/// it is rescaled to determinant one before classifying, which makes the
/// result independent of the U(2,1) representative.
/// Throws std::invalid_argument for non-unitary input.
IsometryClass classify(const GroupElement& m);

}  // namespace chtri
