#include "chtri/triangle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chtri {

using std::numbers::pi;

VertexOrder::VertexOrder(int order) : order_(order) {
  if (order < 2) throw std::invalid_argument("VertexOrder: order must be at least 2");
}

VertexOrder VertexOrder::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::invalid_argument("VertexOrder: expected an integer or 'inf', got '" + std::string(text) + "'");
  return VertexOrder(value);
}

int VertexOrder::value() const {
  if (!order_) throw std::logic_error("VertexOrder::value: order is infinite");
  return *order_;
}

double VertexOrder::cos_pi() const { return order_ ? std::cos(pi / *order_) : 1.0; }
double VertexOrder::sin_pi() const { return order_ ? std::sin(pi / *order_) : 0.0; }
double VertexOrder::cos_two_pi() const { return order_ ? std::cos(2.0 * pi / *order_) : 1.0; }

std::string VertexOrder::to_string() const { return order_ ? std::to_string(*order_) : "inf"; }

double TriangleType::a() const { return std::cos(theta); }

bool valid_word(std::string_view w) {
  if (w.empty()) return false;
  for (char c : w)
    if (c < '1' || c > '3') return false;
  return true;
}

GroupElement TriangleGroup::word(std::string_view w) const {
  if (!valid_word(w)) throw std::invalid_argument("word must be a nonempty string over {1,2,3}");
  GroupElement g;
  for (char c : w) g = g * I(c - '0');
  return g;
}

namespace {

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= pi)) throw std::invalid_argument("theta must lie in [0, pi]");
}

TriangleGroup assemble(TriangleType type, std::array<CVector, 3> polar, std::array<CVector, 3> vertex) {
  TriangleGroup g{type, polar, vertex, {}};
  for (int j = 0; j < 3; ++j) g.involution[j] = involution_from_polar(polar[j]);
  return g;
}

}  // namespace

TriangleGroup build_mn_inf(int m, int n, double theta) {
  if (m < 3 || n < 3) throw std::invalid_argument("build_mn_inf: m and n must be at least 3");
  check_theta(theta);
  const double s1 = std::cos(pi / n);
  const double s2 = std::cos(pi / m);
  const Complex z1 = s1;
  const Complex z2 = std::polar(s2, theta);
  if (std::abs(z2 - z1) < 1e-14) throw std::invalid_argument("build_mn_inf: sides C2 and C3 coincide");

  const std::array<CVector, 3> polar = {CVector(0.0, 1.0, 0.0), CVector(1.0, -z1, z1),
                                        CVector(1.0, -std::conj(z2), std::conj(z2))};
  const std::array<CVector, 3> vertex = {CVector(0.0, 1.0, -1.0), CVector(z2, 0.0, 1.0),
                                         CVector(std::conj(z1), 0.0, 1.0)};
  return assemble(TriangleType{VertexOrder(m), VertexOrder(n), theta}, polar, vertex);
}

TriangleGroup build_n_inf_inf(int n, double theta) {
  if (n < 3) throw std::invalid_argument("build_n_inf_inf: n must be at least 3");
  check_theta(theta);
  const double s = std::cos(pi / n);
  const Complex w = std::polar(s, -theta);
  const std::array<CVector, 3> polar = {CVector(0.0, 1.0, 0.0), CVector(1.0, -1.0, 1.0), CVector(1.0, -w, w)};
  const std::array<CVector, 3> vertex = {CVector(0.0, 1.0, -1.0), CVector(std::conj(w), 0.0, 1.0),
                                         CVector(1.0, 0.0, 1.0)};
  return assemble(TriangleType{VertexOrder::infinity(), VertexOrder(n), theta}, polar, vertex);
}

TriangleGroup build_triangle(const TriangleType& t) {
  if (t.n.is_infinite()) {
    if (t.m.is_infinite()) throw std::invalid_argument("build_triangle: at most one of m, n may be infinite");
    return build_triangle(TriangleType{t.n, t.m, t.theta});
  }
  if (t.m.is_infinite()) return build_n_inf_inf(t.n.value(), t.theta);
  return build_mn_inf(t.m.value(), t.n.value(), t.theta);
}

double angular_invariant(const CVector& p1, const CVector& p2, const CVector& p3) {
  return std::arg(hermitian_form(p3, p2) * hermitian_form(p1, p3) * hermitian_form(p2, p1));
}

Complex trace_123_closed_form(const VertexOrder& m, const VertexOrder& n, double theta) {
  return -5.0 - 2.0 * m.cos_two_pi() - 2.0 * n.cos_two_pi() +
         8.0 * std::polar(1.0, theta) * m.cos_pi() * n.cos_pi();
}

double trace_3132_closed_form(int n, double a) {
  const double s = std::cos(pi / n);
  return 3.0 + 16.0 * s * s - 16.0 * s * a;
}

double discriminant_n_inf_inf_expanded(double a, double s) {
  const double s2 = s * s, s3 = s2 * s, s4 = s2 * s2, s5 = s4 * s, s6 = s3 * s3, s7 = s6 * s, s8 = s4 * s4;
  const double a2 = a * a, a3 = a2 * a;
  return 2048.0 - 10240.0 * a * s + 1792.0 * s2 + 21760.0 * a2 * s2 - 16384.0 * a * s3 - 16384.0 * a3 * s3 +
         7680.0 * s4 + 22528.0 * a2 * s4 - 18944.0 * a * s5 + 3840.0 * s6 + 4096.0 * a2 * s6 - 2048.0 * a * s7 +
         256.0 * s8;
}

double discriminant_3132_factored(double a, double s) {
  const double d = a - s;
  return 16384.0 * d * d * d * s * s * s * (-1.0 + 4.0 * d * s);
}

double parameter_t(double theta) {
  if (!(theta > 0.0 && theta < pi)) throw std::invalid_argument("parameter_t: theta must lie in (0, pi)");
  const double c = std::cos(theta);
  return std::sqrt((1.0 + c) / (1.0 - c));
}

double cos_from_parameter_t(double t) { return (t * t - 1.0) / (t * t + 1.0); }

}  // namespace chtri
