#pragma once

// Non-discreteness certificates for (m, n, inf) triangle groups: the regular
// elliptic criterion on I1 I2 I3, the complex Jorgensen inequality, and
// Shimizu's lemma, plus interval scans in a = cos(theta).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chtri/classify.hpp"
#include "chtri/triangle.hpp"

namespace chtri {

enum class TestKind { regular_elliptic, jorgensen, shimizu };

std::string_view to_string(TestKind t);
/// Accepts "re", "regular_elliptic", "jorgensen", "shimizu".
std::optional<TestKind> parse_test_kind(std::string_view text);

struct RegularEllipticOutcome {
  bool fires = false;
  Complex tau{};
  double f = 0.0;
};

/// Fires iff f(tr I1 I2 I3) < -tol::discriminant.
RegularEllipticOutcome test_regular_elliptic(const TriangleType& t);

/// |cos^2(pi/n) + 2cos^2(pi/m) - 4cos(pi/n)cos(pi/m)cos(theta) + 1| < sin(pi/n)/2.
/// Requires 7 <= n < inf; throws std::invalid_argument otherwise.
bool jorgensen_condition(const TriangleType& t);

/// |u - 2iv| + 4u < 1/4 with u = cos^2(pi/m) + cos^2(pi/n) - 2cos(pi/m)cos(pi/n)cos(theta)
/// and v = cos(pi/m)cos(pi/n)sin(theta).
bool shimizu_condition(const TriangleType& t);

/// Whether the criterion's hypotheses hold for this (m, n) at all.
bool is_applicable(TestKind test, const VertexOrder& m, const VertexOrder& n);

/// Continuous function of a = cos(theta), theta in [0, pi], that is negative
/// exactly where the criterion fires.
double defining_function(TestKind test, const VertexOrder& m, const VertexOrder& n, double a);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct ScanOptions {
  int grid = 100000;
  double tol = 1e-10;
};

struct ScanResult {
  TestKind test = TestKind::regular_elliptic;
  VertexOrder m = VertexOrder::infinity();
  VertexOrder n = VertexOrder::infinity();
  bool applicable = true;
  /// Disjoint maximal intervals in [-1, 1], sorted by lo.
  std::vector<Interval> intervals;
  double endpoint_tolerance = 0.0;
};

/// Sign scan of the defining function on a uniform grid in a, with every sign
/// change refined by bisection to a bracket of width <= tol.
/// Requires grid >= 1000 and 0 < tol <= 1e-6.
ScanResult scan_intervals(TestKind test, const VertexOrder& m, const VertexOrder& n, const ScanOptions& opts = {});

struct TableRow {
  int n = 0;
  std::vector<std::optional<double>> values;
};

struct Table {
  int which = 0;
  std::string caption;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
  std::vector<std::string> notes;
};

/// Rows of n for tables 1, 2 and 3.
const std::vector<int>& table_row_set(int which);

/// Table 1: m = 8 regular elliptic interval (a_n, b_n).
/// Table 2: m = 8 Jorgensen endpoint c_n and Shimizu endpoint d_n.
/// Table 3: m = inf regular elliptic interval (alpha_n, beta_n), Jorgensen
/// endpoint gamma_n, Shimizu endpoint eta_n. Empty scans are std::nullopt.
Table reproduce_table(int which, const ScanOptions& opts = {});

struct WordAnalysis {
  double trace = 0.0;
  IsometryKind kind = IsometryKind::identity;
};

/// tr(I3 I1 I3 I2) = 3 + 16s^2 - 16sa for type (n, inf, inf) and its class:
/// regular elliptic on (s, (1+4s^2)/(4s)), unipotent parabolic at a = s,
/// boundary elliptic at a = (1+4s^2)/(4s), loxodromic below s.
WordAnalysis word_3132_analysis(int n, double a);

/// (s, min(1, (1+4s^2)/(4s))), where I3 I1 I3 I2 is regular elliptic.
Interval word_3132_elliptic_interval(int n);

/// The a = cos(theta) at which tr(I3 I1 I3 I2) = 1 + 2cos(2pi/k).
/// Throws std::domain_error if it falls outside [-1, 1].
double order_k_locus(int n, int k);

/// Inverse of order_k_locus: cos(2pi/k) = 8s^2 + 1 - 8sa.
double order_k_cosine(int n, double a);

struct CriterionOutcome {
  TestKind test = TestKind::regular_elliptic;
  bool applicable = false;
  bool fires = false;
  double value = 0.0;  // defining function at a
};

struct NonDiscretenessReport {
  TriangleType type;
  Complex tau{};
  double discriminant = 0.0;
  std::vector<CriterionOutcome> criteria;
  std::optional<WordAnalysis> word_3132;
  bool certified = false;

  std::string verdict() const { return certified ? "certified non-discrete" : "no certificate"; }
  std::vector<TestKind> firing() const;
};

/// Runs every applicable criterion. Never claims discreteness.
NonDiscretenessReport nondiscreteness_report(const TriangleType& t);

}  // namespace chtri
