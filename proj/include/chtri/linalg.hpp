#pragma once

// Linear algebra on C^{2,1}: the signature (2,1) Hermitian form, projective
// points, the Bergman metric, horospherical coordinates, chains, and complex
// reflections (involutions) in complex geodesics.

#include <array>
#include <complex>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

namespace chtri {

using Complex = std::complex<double>;
using CVector = Eigen::Vector3cd;

namespace tol {
/// Unitarity and determinant checks.
inline constexpr double unitary = 1e-10;
/// Relative band around zero classified as a null vector.
inline constexpr double null_band = 1e-12;
/// Band around zero of the trace discriminant.
inline constexpr double discriminant = 1e-9;
/// Relative singular-value threshold for eigenspace rank decisions.
inline constexpr double rank = 1e-8;
/// Modulus slack for calling an eigenvalue off the unit circle.
inline constexpr double eigen_modulus = 1e-6;
/// Slack on the Shimizu inequality.
inline constexpr double shimizu = 1e-12;
}  // namespace tol

/// 3x3 complex matrix acting on C^{2,1}. Elements of U(2,1) and SU(2,1) are
/// carried by this type; nothing is enforced at construction.
class GroupElement {
 public:
  GroupElement() : m_(Eigen::Matrix3cd::Identity()) {}
  explicit GroupElement(const Eigen::Matrix3cd& m) : m_(m) {}

  static GroupElement identity() { return GroupElement(); }
  static GroupElement from_rows(const std::array<std::array<Complex, 3>, 3>& rows);

  /// Zero-based entry access.
  Complex operator()(int row, int col) const { return m_(row, col); }
  const Eigen::Matrix3cd& matrix() const { return m_; }

  Complex trace() const { return m_.trace(); }
  Complex determinant() const { return m_.determinant(); }

  /// Inverse for form-preserving matrices: J M* J.
  GroupElement form_inverse() const;
  /// General matrix inverse.
  GroupElement inverse() const { return GroupElement(m_.inverse()); }
  /// Hermitian adjoint with respect to the form, J M* J.
  GroupElement adjoint() const { return form_inverse(); }

  GroupElement pow(int k) const;

  CVector operator*(const CVector& z) const { return m_ * z; }
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.m_ * b.m_);
  }
  friend GroupElement operator*(Complex c, const GroupElement& a) { return GroupElement(c * a.m_); }

 private:
  Eigen::Matrix3cd m_;
};

/// diag(1, 1, -1).
const Eigen::Matrix3cd& form_matrix();

/// <z, w> = z1 conj(w1) + z2 conj(w2) - z3 conj(w3).
Complex hermitian_form(const CVector& z, const CVector& w);

enum class VectorType { negative, null, positive };

std::string_view to_string(VectorType t);

/// Sign of <z,z>; values within a relative band of tol::null_band * |z|^2
/// count as null. Throws std::invalid_argument for the zero vector.
VectorType vector_type(const CVector& z);

/// Bergman distance between the points of H^2_C represented by two negative
/// vectors. Scale invariant in both arguments.
double bergman_distance(const CVector& x, const CVector& y);

/// Horospherical coordinates (xi, v, u) on the closure of the Siegel domain, or
/// the distinguished boundary point q_inf.
struct HorosphericalPoint {
  Complex xi{};
  double v = 0.0;
  double u = 0.0;
  bool at_infinity = false;

  static HorosphericalPoint infinity() { return {Complex{}, 0.0, 0.0, true}; }
};

/// Standard lift of a horospherical point to C^{2,1}; q_inf lifts to (0,-1,1).
CVector psi(const HorosphericalPoint& p);

/// The standard lift of q_inf.
CVector q_infinity();

/// Inverse of psi on non-positive vectors. Vectors with z2 + z3 = 0 (within
/// tolerance) are reported as q_inf. Throws for positive vectors.
HorosphericalPoint horospherical_coordinates(const CVector& z);

/// Vertical chain through (z, 0).
struct ZChain {
  Complex z;
};
/// Circle of radius r centred on the vertical axis at height z.
struct ZRChain {
  double z;
  double r;
};
using ChainSpec = std::variant<ZChain, ZRChain>;

/// Polar vector of a chain: (1, -conj z, conj z) for a z-chain and
/// (0, 1 + r^2 + iz, 1 - r^2 - iz) for a (z,r)-chain. Throws for r <= 0.
CVector chain_polar(const ChainSpec& spec);

/// Complex reflection of order two in the complex geodesic polar to p,
/// z -> -z + 2 <z,p>/<p,p> p, normalised to determinant one.
/// Throws std::invalid_argument unless p is positive.
GroupElement involution_from_polar(const CVector& p);

/// Rescale by a cube root of det so that det = 1, picking the root whose
/// argument lies in (-pi/3, pi/3].
GroupElement normalize_to_su21(const GroupElement& m);

/// max-entry norm of M* J M - J is at most tol::unitary * max(1, |M|_max^2).
bool is_unitary_for_form(const GroupElement& m);

/// Largest entry modulus.
double max_entry_norm(const Eigen::Matrix3cd& m);

/// True when a and b agree up to a nonzero complex scalar.
bool projectively_equal(const CVector& a, const CVector& b, double tol = 1e-10);

/// True when m is a scalar multiple of the identity.
bool projectively_identity(const GroupElement& m, double tol = 1e-10);

}  // namespace chtri
