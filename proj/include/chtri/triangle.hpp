#pragma once

// Complex hyperbolic triangle groups of type (m, n, inf) and (n, inf, inf):
// polar vectors, vertices, the three involutions, and closed-form traces.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "chtri/linalg.hpp"

namespace chtri {

/// Vertex order p of an angle pi/p; p = inf encodes a tangency at the boundary.
class VertexOrder {
 public:
  /// Throws std::invalid_argument unless order >= 2.
  explicit VertexOrder(int order);
  static VertexOrder infinity() { return VertexOrder(); }
  /// Parses "inf" / "infinity" or a positive integer.
  static VertexOrder parse(std::string_view text);

  bool is_infinite() const { return !order_.has_value(); }
  /// Throws std::logic_error when infinite.
  int value() const;

  /// cos(pi/p), with cos(pi/inf) = 1.
  double cos_pi() const;
  /// sin(pi/p), with sin(pi/inf) = 0.
  double sin_pi() const;
  /// cos(2 pi/p), with cos(2 pi/inf) = 1.
  double cos_two_pi() const;

  std::string to_string() const;

  friend bool operator==(const VertexOrder&, const VertexOrder&) = default;

 private:
  VertexOrder() = default;
  std::optional<int> order_;
};

/// Type parameters of an (m, n, inf) triangle and its angular invariant theta.
struct TriangleType {
  VertexOrder m = VertexOrder::infinity();
  VertexOrder n = VertexOrder::infinity();
  double theta = 0.0;

  double a() const;  // cos(theta)
};

struct TriangleGroup {
  TriangleType type;
  /// Polar vectors of the sides C1, C2, C3.
  std::array<CVector, 3> polar;
  /// vertex[i] is the vertex opposite side C_{i+1}, orthogonal to the other two polars.
  std::array<CVector, 3> vertex;
  /// Complex reflections I1, I2, I3 in the sides.
  std::array<GroupElement, 3> involution;

  const GroupElement& I(int j) const { return involution.at(static_cast<std::size_t>(j - 1)); }

  /// Product of involutions named by a word over {1,2,3}, left to right;
  /// "3132" is I3 I1 I3 I2. Throws std::invalid_argument for a malformed word.
  GroupElement word(std::string_view w) const;
};

/// True iff w is nonempty and every character is 1, 2 or 3.
bool valid_word(std::string_view w);

/// Sides: the (0,1)-chain, the cos(pi/n)-chain, and the e^{i theta}cos(pi/m)-chain.
/// Requires finite m, n >= 3 and theta in [0, pi]; rejects the degenerate
/// configuration cos(pi/m) e^{i theta} = cos(pi/n).
TriangleGroup build_mn_inf(int m, int n, double theta);

/// (n, inf, inf) normalisation: p2 = (1,-1,1), p3 = (1, -s e^{-i theta}, s e^{-i theta}),
/// s = cos(pi/n). Requires n >= 3 and theta in [0, pi].
TriangleGroup build_n_inf_inf(int n, double theta);

/// Dispatches to build_mn_inf or, for m = inf, build_n_inf_inf.
TriangleGroup build_triangle(const TriangleType& t);

/// arg(<p3,p2><p1,p3><p2,p1>).
double angular_invariant(const CVector& p1, const CVector& p2, const CVector& p3);

/// tr(I1 I2 I3) = -5 - 2cos(2pi/m) - 2cos(2pi/n) + 8 e^{i theta} cos(pi/m) cos(pi/n).
Complex trace_123_closed_form(const VertexOrder& m, const VertexOrder& n, double theta);

/// tr(I3 I1 I3 I2) = 3 + 16 s^2 - 16 s a for type (n, inf, inf), s = cos(pi/n).
double trace_3132_closed_form(int n, double a);

/// Expanded discriminant of tr(I1 I2 I3) for type (n, inf, inf) as a
/// polynomial in a = cos(theta) and s = cos(pi/n).
double discriminant_n_inf_inf_expanded(double a, double s);

/// Factored discriminant of tr(I3 I1 I3 I2): 16384 (a-s)^3 s^3 (-1 + 4(a-s)s).
double discriminant_3132_factored(double a, double s);

/// Wyss-Gallifent parameter t with cos(theta) = (t^2-1)/(t^2+1).
/// Throws std::invalid_argument unless theta is in (0, pi).
double parameter_t(double theta);
double cos_from_parameter_t(double t);

}  // namespace chtri
