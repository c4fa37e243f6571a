#include "chtri/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chtri {

std::string_view to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::identity: return "identity";
    case IsometryKind::regular_elliptic: return "regular_elliptic";
    case IsometryKind::boundary_elliptic: return "boundary_elliptic";
    case IsometryKind::unipotent_parabolic: return "unipotent_parabolic";
    case IsometryKind::parabolic: return "parabolic";
    case IsometryKind::loxodromic: return "loxodromic";
  }
  return "unknown";
}

double discriminant(Complex z) {
  const double r2 = std::norm(z);
  return r2 * r2 - 8.0 * (z * z * z).real() + 18.0 * r2 - 27.0;
}

Complex trace(const GroupElement& m) { return m.trace(); }

namespace {

Complex complex_cbrt(Complex z) {
  if (z == Complex{}) return z;
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

Complex eval_cubic(Complex x, Complex b, Complex c, Complex d) { return ((x + b) * x + c) * x + d; }

Complex eval_cubic_derivative(Complex x, Complex b, Complex c) { return (3.0 * x + 2.0 * b) * x + c; }

const std::array<Complex, 3>& cube_roots_of_unity() {
  static const std::array<Complex, 3> w = {Complex(1.0, 0.0), std::polar(1.0, 2.0 * std::numbers::pi / 3.0),
                                           std::polar(1.0, -2.0 * std::numbers::pi / 3.0)};
  return w;
}

}  // namespace

std::array<Complex, 3> cubic_roots(Complex b, Complex c, Complex d) {
  const Complex p = c - b * b / 3.0;
  const Complex q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const Complex sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  Complex u = -q / 2.0 + sq;
  const Complex u2 = -q / 2.0 - sq;
  if (std::abs(u2) > std::abs(u)) u = u2;
  const Complex C = complex_cbrt(u);

  std::array<Complex, 3> roots{};
  const auto& w = cube_roots_of_unity();
  for (int k = 0; k < 3; ++k) {
    Complex t{};
    if (C != Complex{}) {
      const Complex ck = C * w[k];
      t = ck - p / (3.0 * ck);
    }
    Complex x = t - b / 3.0;
    for (int it = 0; it < 4; ++it) {
      const Complex fx = eval_cubic(x, b, c, d);
      const Complex dfx = eval_cubic_derivative(x, b, c);
      if (dfx == Complex{}) break;
      const Complex next = x - fx / dfx;
      if (std::abs(eval_cubic(next, b, c, d)) >= std::abs(fx)) break;
      x = next;
    }
    roots[k] = x;
  }
  return roots;
}

std::array<Complex, 3> eigenvalues(const GroupElement& m) {
  const Complex tr = m.trace();
  const Complex tr2 = (m.matrix() * m.matrix()).trace();
  const Complex c2 = 0.5 * (tr * tr - tr2);
  return cubic_roots(-tr, c2, -m.determinant());
}

namespace {

int numerical_rank(const Eigen::Matrix3cd& a, double scale) {
  Eigen::JacobiSVD<Eigen::Matrix3cd> svd(a);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < 3; ++i)
    if (sv(i) > tol::rank * scale) ++rank;
  return rank;
}

double operator_norm(const Eigen::Matrix3cd& a) {
  Eigen::JacobiSVD<Eigen::Matrix3cd> svd(a);
  return svd.singularValues()(0);
}

// Repeated root of the characteristic cubic, taken as the root of its
// derivative with the smaller residual.
Complex repeated_eigenvalue(const GroupElement& m) {
  const Complex tr = m.trace();
  const Complex tr2 = (m.matrix() * m.matrix()).trace();
  const Complex b = -tr;
  const Complex c = 0.5 * (tr * tr - tr2);
  const Complex d = -m.determinant();
  // 3x^2 + 2bx + c = 0
  const Complex disc = std::sqrt(4.0 * b * b - 12.0 * c);
  const Complex r1 = (-2.0 * b + disc) / 6.0;
  const Complex r2 = (-2.0 * b - disc) / 6.0;
  return std::abs(eval_cubic(r1, b, c, d)) <= std::abs(eval_cubic(r2, b, c, d)) ? r1 : r2;
}

}  // namespace

IsometryClass classify(const GroupElement& input) {
  if (!is_unitary_for_form(input)) throw std::invalid_argument("classify: matrix does not preserve the form");
  const GroupElement m = normalize_to_su21(input);

  IsometryClass out;
  out.trace = m.trace();
  out.discriminant = discriminant(out.trace);
  out.eigenvalues = eigenvalues(m);

  if (projectively_identity(m)) {
    out.kind = IsometryKind::identity;
    return out;
  }
  if (out.discriminant < -tol::discriminant) {
    out.kind = IsometryKind::regular_elliptic;
    return out;
  }
  if (out.discriminant > tol::discriminant) {
    out.kind = IsometryKind::loxodromic;
    return out;
  }

  // |f| inside the band: decide by eigenstructure.
  const double mnorm = operator_norm(m.matrix());
  for (const Complex w : cube_roots_of_unity()) {
    if (std::abs(out.trace - 3.0 * w) <= tol::discriminant) {
      out.kind = IsometryKind::unipotent_parabolic;
      return out;
    }
  }

  const auto& ev = out.eigenvalues;
  int ia = 0, ib = 1;
  double gap = std::abs(ev[0] - ev[1]);
  if (std::abs(ev[0] - ev[2]) < gap) gap = std::abs(ev[0] - ev[2]), ia = 0, ib = 2;
  if (std::abs(ev[1] - ev[2]) < gap) gap = std::abs(ev[1] - ev[2]), ia = 1, ib = 2;

  const double gap_tol = 1e-6 * std::max(1.0, std::sqrt(mnorm));
  if (gap > gap_tol) {
    // Distinct eigenvalues. A close elliptic pair differs tangentially to the
    // unit circle; a close loxodromic pair r e^{i phi}, r^{-1} e^{i phi} radially.
    const Complex mean = 0.5 * (ev[ia] + ev[ib]);
    const Complex rel = (ev[ia] - ev[ib]) / mean;
    out.kind = std::abs(rel.real()) > std::abs(rel.imag()) ? IsometryKind::loxodromic
                                                            : IsometryKind::regular_elliptic;
    return out;
  }

  const Complex lambda = repeated_eigenvalue(m);
  const int rank = numerical_rank(m.matrix() - lambda * Eigen::Matrix3cd::Identity(), mnorm);
  out.kind = rank <= 1 ? IsometryKind::boundary_elliptic : IsometryKind::parabolic;
  return out;
}

}  // namespace chtri
