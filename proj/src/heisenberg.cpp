#include "chtri/heisenberg.hpp"

#include <cmath>
#include <stdexcept>

namespace chtri {

const HeisenbergPoint& BoundaryPoint::point() const {
  if (!point_) throw std::logic_error("BoundaryPoint::point: point at infinity");
  return *point_;
}

HeisenbergPoint heis_mul(const HeisenbergPoint& p, const HeisenbergPoint& q) {
  return {p.xi + q.xi, p.v + q.v + 2.0 * (p.xi * std::conj(q.xi)).imag()};
}

HeisenbergPoint heis_inverse(const HeisenbergPoint& p) { return {-p.xi, -p.v}; }

double heisenberg_norm(const HeisenbergPoint& p) {
  return std::sqrt(std::abs(Complex(std::norm(p.xi), -p.v)));
}

double cygan_distance(const HeisenbergPoint& p, const HeisenbergPoint& q) {
  return heisenberg_norm(heis_mul(heis_inverse(p), q));
}

double cygan_distance_ext(const ExtendedPoint& p, const ExtendedPoint& q) {
  const double re = std::norm(p.xi - q.xi) + std::abs(p.u - q.u);
  const double im = -p.v + q.v - 2.0 * (p.xi * std::conj(q.xi)).imag();
  return std::sqrt(std::abs(Complex(re, im)));
}

CVector boundary_lift(const BoundaryPoint& p) {
  if (p.is_infinity()) return q_infinity();
  return psi(HorosphericalPoint{p.point().xi, p.point().v, 0.0, false});
}

BoundaryPoint boundary_point_of(const CVector& z) {
  const HorosphericalPoint h = horospherical_coordinates(z);
  if (h.at_infinity) return BoundaryPoint::infinity();
  return HeisenbergPoint{h.xi, h.v};
}

namespace {

// <M q_inf, q_inf> = a22 - a23 + a32 - a33 in one-based indexing.
Complex infinity_pairing(const GroupElement& m) { return m(1, 1) - m(1, 2) + m(2, 1) - m(2, 2); }

double entry_scale(const GroupElement& m) { return std::max(1.0, max_entry_norm(m.matrix())); }

}  // namespace

bool fixes_infinity(const GroupElement& m) {
  return std::abs(infinity_pairing(m)) <= 1e-10 * entry_scale(m);
}

BoundaryPoint boundary_action(const GroupElement& m, const BoundaryPoint& p) {
  return boundary_point_of(m * boundary_lift(p));
}

GroupElement heisenberg_translation(Complex xi, double v) {
  // In the coordinates (z1, z2 + z3, z3 - z2) the translation is lower
  // triangular: zeta' = zeta + xi s, w' = w + 2 conj(xi) zeta + (|xi|^2 - iv) s.
  Eigen::Matrix3cd P;
  P << 1, 0, 0, 0, 1, 1, 0, -1, 1;
  Eigen::Matrix3cd Pinv;
  Pinv << 1, 0, 0, 0, 0.5, -0.5, 0, 0.5, 0.5;
  Eigen::Matrix3cd A;
  A << 1, xi, 0, 0, 1, 0, 2.0 * std::conj(xi), Complex(std::norm(xi), -v), 1;
  return GroupElement(Pinv * A * P);
}

double translation_length(const GroupElement& g, const HeisenbergPoint& z) {
  if (!fixes_infinity(g)) throw std::invalid_argument("translation_length: element moves infinity");
  const BoundaryPoint gz = boundary_action(g, z);
  return cygan_distance(gz.point(), z);
}

IsometricSphere isometric_sphere(const GroupElement& h) {
  if (fixes_infinity(h)) throw std::invalid_argument("isometric_sphere: element fixes infinity");
  const GroupElement hn = normalize_to_su21(h);
  IsometricSphere s;
  s.radius = std::sqrt(2.0 / std::abs(infinity_pairing(hn)));
  s.center = boundary_action(hn.form_inverse(), BoundaryPoint::infinity()).point();
  return s;
}

HeisenbergPoint translation_vector(const GroupElement& g) {
  if (!fixes_infinity(g)) throw std::invalid_argument("translation_vector: element moves infinity");
  const HeisenbergPoint t = boundary_action(g, HeisenbergPoint{}).point();
  for (const HeisenbergPoint probe : {HeisenbergPoint{1.0, 0.0}, HeisenbergPoint{Complex(0.0, 1.0), 0.0},
                                      HeisenbergPoint{0.0, 1.0}}) {
    const HeisenbergPoint got = boundary_action(g, probe).point();
    const HeisenbergPoint want = heis_mul(t, probe);
    const double scale = 1.0 + std::abs(want.xi) + std::abs(want.v);
    if (std::abs(got.xi - want.xi) > 1e-9 * scale || std::abs(got.v - want.v) > 1e-9 * scale)
      throw std::invalid_argument("translation_vector: element is not a Heisenberg translation");
  }
  return t;
}

ShimizuTerms shimizu_terms(const GroupElement& g, const GroupElement& h) {
  const HeisenbergPoint t = translation_vector(g);
  const IsometricSphere sphere = isometric_sphere(h);
  const HeisenbergPoint h_inf = boundary_action(h, BoundaryPoint::infinity()).point();
  const HeisenbergPoint hinv_inf = sphere.center;

  ShimizuTerms out;
  out.radius_squared = sphere.radius * sphere.radius;
  out.translation_product = translation_length(g, hinv_inf) * translation_length(g, h_inf);
  out.xi_term = 4.0 * std::norm(t.xi);
  out.violated = out.radius_squared > out.translation_product + out.xi_term + tol::shimizu;
  return out;
}

bool shimizu_violation(const GroupElement& g, const GroupElement& h) { return shimizu_terms(g, h).violated; }

}  // namespace chtri
