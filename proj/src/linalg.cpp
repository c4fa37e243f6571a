#include "chtri/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chtri {

GroupElement GroupElement::from_rows(const std::array<std::array<Complex, 3>, 3>& rows) {
  Eigen::Matrix3cd m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = rows[i][j];
  return GroupElement(m);
}

GroupElement GroupElement::form_inverse() const {
  const auto& J = form_matrix();
  return GroupElement(J * m_.adjoint() * J);
}

GroupElement GroupElement::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Eigen::Matrix3cd result = Eigen::Matrix3cd::Identity();
  Eigen::Matrix3cd base = m_;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return GroupElement(result);
}

const Eigen::Matrix3cd& form_matrix() {
  static const Eigen::Matrix3cd J = [] {
    Eigen::Matrix3cd j = Eigen::Matrix3cd::Zero();
    j(0, 0) = 1.0;
    j(1, 1) = 1.0;
    j(2, 2) = -1.0;
    return j;
  }();
  return J;
}

Complex hermitian_form(const CVector& z, const CVector& w) {
  return z(0) * std::conj(w(0)) + z(1) * std::conj(w(1)) - z(2) * std::conj(w(2));
}

std::string_view to_string(VectorType t) {
  switch (t) {
    case VectorType::negative: return "negative";
    case VectorType::null: return "null";
    case VectorType::positive: return "positive";
  }
  return "unknown";
}

VectorType vector_type(const CVector& z) {
  const double scale = z.squaredNorm();
  if (scale == 0.0) throw std::invalid_argument("vector_type: zero vector");
  const double q = hermitian_form(z, z).real();
  if (std::abs(q) <= tol::null_band * scale) return VectorType::null;
  return q < 0.0 ? VectorType::negative : VectorType::positive;
}

double bergman_distance(const CVector& x, const CVector& y) {
  if (vector_type(x) != VectorType::negative || vector_type(y) != VectorType::negative)
    throw std::invalid_argument("bergman_distance: both vectors must be negative");
  const double num = std::norm(hermitian_form(x, y));
  const double den = hermitian_form(x, x).real() * hermitian_form(y, y).real();
  const double cosh2 = std::max(1.0, num / den);
  return 2.0 * std::acosh(std::sqrt(cosh2));
}

CVector q_infinity() { return CVector(0.0, -1.0, 1.0); }

CVector psi(const HorosphericalPoint& p) {
  if (p.at_infinity) return q_infinity();
  const double r2 = std::norm(p.xi);
  const Complex iv(0.0, p.v);
  return CVector(p.xi, 0.5 * (1.0 - r2 - p.u + iv), 0.5 * (1.0 + r2 + p.u - iv));
}

HorosphericalPoint horospherical_coordinates(const CVector& z) {
  if (vector_type(z) == VectorType::positive)
    throw std::invalid_argument("horospherical_coordinates: positive vector");
  const Complex s = z(1) + z(2);
  if (std::abs(s) <= 1e-12 * z.norm()) return HorosphericalPoint::infinity();
  const CVector w = z / s;
  const Complex d = w(2) - w(1);  // |xi|^2 + u - iv
  HorosphericalPoint p;
  p.xi = w(0);
  p.v = -d.imag();
  p.u = std::max(0.0, d.real() - std::norm(p.xi));
  return p;
}

CVector chain_polar(const ChainSpec& spec) {
  return std::visit(
      [](const auto& c) -> CVector {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ZChain>) {
          const Complex zb = std::conj(c.z);
          return CVector(1.0, -zb, zb);
        } else {
          if (!(c.r > 0.0)) throw std::invalid_argument("chain_polar: radius must be positive");
          const Complex iz(0.0, c.z);
          return CVector(0.0, 1.0 + c.r * c.r + iz, 1.0 - c.r * c.r - iz);
        }
      },
      spec);
}

GroupElement normalize_to_su21(const GroupElement& m) {
  const Complex det = m.determinant();
  if (std::abs(det) == 0.0) throw std::invalid_argument("normalize_to_su21: singular matrix");
  // principal cube root has argument in (-pi/3, pi/3]
  const Complex root = std::polar(std::cbrt(std::abs(det)), std::arg(det) / 3.0);
  return (1.0 / root) * m;
}

GroupElement involution_from_polar(const CVector& p) {
  if (vector_type(p) != VectorType::positive)
    throw std::invalid_argument("involution_from_polar: polar vector must be positive");
  const double pp = hermitian_form(p, p).real();
  // <z,p> = p^* J z, so z -> 2 <z,p>/<p,p> p is the rank-one map p p^* J.
  Eigen::Matrix3cd m = -Eigen::Matrix3cd::Identity() + (2.0 / pp) * p * p.adjoint() * form_matrix();
  return normalize_to_su21(GroupElement(m));
}

double max_entry_norm(const Eigen::Matrix3cd& m) { return m.cwiseAbs().maxCoeff(); }

bool is_unitary_for_form(const GroupElement& m) {
  const auto& J = form_matrix();
  // Rounding in M* J M grows with the square of the entries.
  const double scale = std::max(1.0, std::pow(max_entry_norm(m.matrix()), 2));
  return max_entry_norm(m.matrix().adjoint() * J * m.matrix() - J) <= tol::unitary * scale;
}

bool projectively_equal(const CVector& a, const CVector& b, double tol) {
  // a and b are parallel iff every 2x2 minor of [a b] vanishes.
  const double scale = a.norm() * b.norm();
  if (scale == 0.0) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(a(i) * b(j) - a(j) * b(i)) > tol * scale) return false;
  return true;
}

bool projectively_identity(const GroupElement& m, double tol) {
  const Complex lambda = m.trace() / 3.0;
  const double scale = std::max(1.0, max_entry_norm(m.matrix()));
  return std::abs(lambda) > 0.0 &&
         max_entry_norm(m.matrix() - lambda * Eigen::Matrix3cd::Identity()) <= tol * scale;
}

}  // namespace chtri
