#pragma once

// Heisenberg group C x R, the Cygan metric, and the action of SU(2,1) on the
// boundary of the Siegel domain.

#include <optional>

#include "chtri/linalg.hpp"

namespace chtri {

struct HeisenbergPoint {
  Complex xi{};
  double v = 0.0;
};

/// Point of the closed Siegel domain minus q_inf, in horospherical coordinates.
struct ExtendedPoint {
  Complex xi{};
  double v = 0.0;
  double u = 0.0;
};

/// A boundary point: either a Heisenberg point or q_inf.
class BoundaryPoint {
 public:
  BoundaryPoint() = default;
  BoundaryPoint(HeisenbergPoint p) : point_(p) {}  // NOLINT(google-explicit-constructor)
  static BoundaryPoint infinity() { return BoundaryPoint(); }

  bool is_infinity() const { return !point_.has_value(); }
  /// Throws std::logic_error at infinity.
  const HeisenbergPoint& point() const;

 private:
  std::optional<HeisenbergPoint> point_;
};

/// (xi1, v1) * (xi2, v2) = (xi1 + xi2, v1 + v2 + 2 Im(xi1 conj xi2)).
HeisenbergPoint heis_mul(const HeisenbergPoint& p, const HeisenbergPoint& q);
HeisenbergPoint heis_inverse(const HeisenbergPoint& p);

/// | |xi|^2 - i v |^{1/2}.
double heisenberg_norm(const HeisenbergPoint& p);

double cygan_distance(const HeisenbergPoint& p, const HeisenbergPoint& q);
double cygan_distance_ext(const ExtendedPoint& p, const ExtendedPoint& q);

/// Lift of a boundary point (psi with u = 0).
CVector boundary_lift(const BoundaryPoint& p);

/// Reads back the boundary point represented by a null vector.
BoundaryPoint boundary_point_of(const CVector& z);

bool fixes_infinity(const GroupElement& m);

/// Projective action on the boundary. Points sent to q_inf come back as
/// BoundaryPoint::infinity().
BoundaryPoint boundary_action(const GroupElement& m, const BoundaryPoint& p);

/// Matrix of the left Heisenberg translation z -> (xi, v) * z.
GroupElement heisenberg_translation(Complex xi, double v);

/// rho_0(g(z), z) for g fixing q_inf. Throws std::invalid_argument otherwise.
double translation_length(const GroupElement& g, const HeisenbergPoint& z);

struct IsometricSphere {
  HeisenbergPoint center;
  double radius = 0.0;
};

/// Cygan sphere centred at h^{-1}(inf) with radius sqrt(2/|a22-a23+a32-a33|).
/// Throws std::invalid_argument if h fixes q_inf.
IsometricSphere isometric_sphere(const GroupElement& h);

/// Translation vector (xi, v) of a Heisenberg translation, read off as g(0,0)
/// after checking that g fixes q_inf and acts by left translation.
/// Throws std::invalid_argument if g is not a Heisenberg translation.
HeisenbergPoint translation_vector(const GroupElement& g);

struct ShimizuTerms {
  double radius_squared = 0.0;
  double translation_product = 0.0;  // t_g(h^{-1}(inf)) t_g(h(inf))
  double xi_term = 0.0;              // 4 |xi|^2
  bool violated = false;
};

/// Shimizu's inequality for a Heisenberg translation g and an element h not
/// fixing q_inf; a violation certifies that <g, h> is not discrete.
ShimizuTerms shimizu_terms(const GroupElement& g, const GroupElement& h);
bool shimizu_violation(const GroupElement& g, const GroupElement& h);

}  // namespace chtri
