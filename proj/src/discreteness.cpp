#include "chtri/discreteness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "chtri/parallel.hpp"

namespace chtri {

using std::numbers::pi;

std::string_view to_string(TestKind t) {
  switch (t) {
    case TestKind::regular_elliptic: return "regular_elliptic";
    case TestKind::jorgensen: return "jorgensen";
    case TestKind::shimizu: return "shimizu";
  }
  return "unknown";
}

std::optional<TestKind> parse_test_kind(std::string_view text) {
  if (text == "re" || text == "regular_elliptic") return TestKind::regular_elliptic;
  if (text == "jorgensen") return TestKind::jorgensen;
  if (text == "shimizu") return TestKind::shimizu;
  return std::nullopt;
}

namespace {

double sin_from_cos(double a) { return std::sqrt(std::max(0.0, 1.0 - a * a)); }

double re_function(const VertexOrder& m, const VertexOrder& n, double a) {
  return discriminant(trace_123_closed_form(m, n, std::acos(std::clamp(a, -1.0, 1.0)))) + tol::discriminant;
}

double jorgensen_function(const VertexOrder& m, const VertexOrder& n, double a) {
  const double s1 = n.cos_pi();
  const double s2 = m.cos_pi();
  return std::abs(s1 * s1 + 2.0 * s2 * s2 - 4.0 * s1 * s2 * a + 1.0) - 0.5 * n.sin_pi();
}

double shimizu_function(const VertexOrder& m, const VertexOrder& n, double a, double sin_theta) {
  const double s1 = n.cos_pi();
  const double s2 = m.cos_pi();
  const double u = s1 * s1 + s2 * s2 - 2.0 * s1 * s2 * a;
  const double v = s1 * s2 * sin_theta;
  return std::hypot(u, 2.0 * v) + 4.0 * u - 0.25;
}

bool jorgensen_applicable(const VertexOrder& n) { return !n.is_infinite() && n.value() >= 7; }

}  // namespace

RegularEllipticOutcome test_regular_elliptic(const TriangleType& t) {
  RegularEllipticOutcome out;
  out.tau = trace_123_closed_form(t.m, t.n, t.theta);
  out.f = discriminant(out.tau);
  out.fires = out.f < -tol::discriminant;
  return out;
}

bool jorgensen_condition(const TriangleType& t) {
  if (!jorgensen_applicable(t.n))
    throw std::invalid_argument("jorgensen_condition: requires an elliptic order 7 <= n < inf");
  return jorgensen_function(t.m, t.n, std::cos(t.theta)) < 0.0;
}

bool shimizu_condition(const TriangleType& t) {
  return shimizu_function(t.m, t.n, std::cos(t.theta), std::sin(t.theta)) < 0.0;
}

bool is_applicable(TestKind test, const VertexOrder& /*m*/, const VertexOrder& n) {
  return test != TestKind::jorgensen || jorgensen_applicable(n);
}

double defining_function(TestKind test, const VertexOrder& m, const VertexOrder& n, double a) {
  switch (test) {
    case TestKind::regular_elliptic: return re_function(m, n, a);
    case TestKind::jorgensen: return jorgensen_function(m, n, a);
    case TestKind::shimizu: return shimizu_function(m, n, a, sin_from_cos(a));
  }
  throw std::logic_error("defining_function: unknown test");
}

namespace {

// g(positive) >= 0 > g(negative); returns the midpoint of the final bracket.
template <class F>
double bisect(F&& g, double positive, double negative, double tol) {
  while (std::abs(negative - positive) > tol) {
    const double mid = 0.5 * (positive + negative);
    if (mid == positive || mid == negative) break;
    if (g(mid) < 0.0)
      negative = mid;
    else
      positive = mid;
  }
  return 0.5 * (positive + negative);
}

}  // namespace

ScanResult scan_intervals(TestKind test, const VertexOrder& m, const VertexOrder& n, const ScanOptions& opts) {
  if (opts.grid < 1000) throw std::invalid_argument("scan_intervals: grid must be at least 1000");
  if (!(opts.tol > 0.0 && opts.tol <= 1e-6)) throw std::invalid_argument("scan_intervals: tol must lie in (0, 1e-6]");

  ScanResult result;
  result.test = test;
  result.m = m;
  result.n = n;
  result.endpoint_tolerance = opts.tol;
  result.applicable = is_applicable(test, m, n);
  if (!result.applicable) return result;

  const auto g = [&](double a) { return defining_function(test, m, n, a); };
  const std::size_t cells = static_cast<std::size_t>(opts.grid);
  const double h = 2.0 / static_cast<double>(cells);
  // Even entries are grid nodes, odd entries the midpoints between them.
  const std::size_t samples = 2 * cells + 1;
  const auto node = [&](std::size_t k) { return k == samples - 1 ? 1.0 : -1.0 + 0.5 * h * static_cast<double>(k); };

  std::vector<char> fires(samples, 0);
  parallel_chunks(samples, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) fires[k] = g(node(k)) < 0.0 ? 1 : 0;
  });

  std::size_t k = 0;
  while (k < samples) {
    if (!fires[k]) {
      ++k;
      continue;
    }
    std::size_t last = k;
    while (last + 1 < samples && fires[last + 1]) ++last;

    Interval iv;
    iv.lo = k == 0 ? -1.0 : bisect(g, node(k - 1), node(k), opts.tol);
    iv.hi = last == samples - 1 ? 1.0 : bisect(g, node(last + 1), node(last), opts.tol);
    result.intervals.push_back(iv);
    k = last + 1;
  }
  return result;
}

const std::vector<int>& table_row_set(int which) {
  static const std::vector<int> t1 = {11, 12, 13, 14, 15, 20, 30, 40, 100, 200};
  static const std::vector<int> t2 = {4, 5, 6, 7, 8, 9, 10, 20, 30, 100, 200};
  static const std::vector<int> t3 = {4, 5, 6, 7, 8, 9, 10, 15, 20, 40, 100, 200};
  switch (which) {
    case 1: return t1;
    case 2: return t2;
    case 3: return t3;
    default: throw std::invalid_argument("table_row_set: tables are numbered 1, 2, 3");
  }
}

namespace {

void push_interval(TableRow& row, Table& table, const ScanResult& r) {
  if (r.intervals.empty()) {
    row.values.emplace_back();
    row.values.emplace_back();
    return;
  }
  if (r.intervals.size() > 1)
    table.notes.push_back("n=" + std::to_string(row.n) + ": " + std::to_string(r.intervals.size()) + " disjoint " +
                          std::string(to_string(r.test)) + " intervals; reporting the outer endpoints");
  row.values.emplace_back(r.intervals.front().lo);
  row.values.emplace_back(r.intervals.back().hi);
}

void push_left_endpoint(TableRow& row, Table& table, const ScanResult& r) {
  if (r.intervals.empty()) {
    row.values.emplace_back();
    return;
  }
  const Interval& last = r.intervals.back();
  if (r.intervals.size() > 1 || last.hi != 1.0)
    table.notes.push_back("n=" + std::to_string(row.n) + ": " + std::string(to_string(r.test)) +
                          " scan does not reduce to a single interval (lo, 1)");
  row.values.emplace_back(last.lo);
}

}  // namespace

Table reproduce_table(int which, const ScanOptions& opts) {
  Table table;
  table.which = which;
  const auto& rows = table_row_set(which);
  const VertexOrder eight(8);
  const VertexOrder inf = VertexOrder::infinity();

  std::vector<std::pair<TestKind, VertexOrder>> plan;
  switch (which) {
    case 1:
      table.caption = "Approximate values of a_n, b_n (m = 8, regular elliptic I1I2I3)";
      table.columns = {"a_n", "b_n"};
      plan = {{TestKind::regular_elliptic, eight}};
      break;
    case 2:
      table.caption = "Approximate values of c_n, d_n (m = 8; Jorgensen, Shimizu)";
      table.columns = {"c_n", "d_n"};
      plan = {{TestKind::jorgensen, eight}, {TestKind::shimizu, eight}};
      break;
    case 3:
      table.caption = "Approximate values of alpha_n, beta_n, gamma_n, eta_n (type (n, inf, inf))";
      table.columns = {"alpha_n", "beta_n", "gamma_n", "eta_n"};
      plan = {{TestKind::regular_elliptic, inf}, {TestKind::jorgensen, inf}, {TestKind::shimizu, inf}};
      break;
    default: throw std::invalid_argument("reproduce_table: tables are numbered 1, 2, 3");
  }

  std::vector<ScanResult> scans(rows.size() * plan.size());
  parallel_chunks(scans.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& [test, m] = plan[i % plan.size()];
      scans[i] = scan_intervals(test, m, VertexOrder(rows[i / plan.size()]), opts);
    }
  });

  for (std::size_t r = 0; r < rows.size(); ++r) {
    TableRow row;
    row.n = rows[r];
    for (std::size_t c = 0; c < plan.size(); ++c) {
      const ScanResult& scan = scans[r * plan.size() + c];
      if (plan[c].first == TestKind::regular_elliptic)
        push_interval(row, table, scan);
      else
        push_left_endpoint(row, table, scan);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

WordAnalysis word_3132_analysis(int n, double a) {
  if (n < 3) throw std::invalid_argument("word_3132_analysis: n must be at least 3");
  if (!(a >= -1.0 && a <= 1.0)) throw std::invalid_argument("word_3132_analysis: a must lie in [-1, 1]");
  const double s = std::cos(pi / n);
  const double upper = (1.0 + 4.0 * s * s) / (4.0 * s);
  constexpr double eps = 1e-12;

  WordAnalysis out;
  out.trace = trace_3132_closed_form(n, a);
  if (std::abs(a - s) <= eps)
    out.kind = IsometryKind::unipotent_parabolic;
  else if (std::abs(a - upper) <= eps)
    out.kind = IsometryKind::boundary_elliptic;
  else if (a < s)
    out.kind = IsometryKind::loxodromic;
  else
    out.kind = IsometryKind::regular_elliptic;
  return out;
}

Interval word_3132_elliptic_interval(int n) {
  const double s = std::cos(pi / n);
  return {s, std::min(1.0, (1.0 + 4.0 * s * s) / (4.0 * s))};
}

double order_k_locus(int n, int k) {
  if (n < 3) throw std::invalid_argument("order_k_locus: n must be at least 3");
  if (k < 2) throw std::invalid_argument("order_k_locus: k must be at least 2");
  const double s = std::cos(pi / n);
  const double a = (8.0 * s * s - std::cos(2.0 * pi / k) + 1.0) / (8.0 * s);
  if (!(a >= -1.0 && a <= 1.0))
    throw std::domain_error("order_k_locus: no configuration, cos(theta) = " + std::to_string(a));
  return a;
}

double order_k_cosine(int n, double a) {
  const double s = std::cos(pi / n);
  return 8.0 * s * s + 1.0 - 8.0 * s * a;
}

std::vector<TestKind> NonDiscretenessReport::firing() const {
  std::vector<TestKind> out;
  for (const auto& c : criteria)
    if (c.fires) out.push_back(c.test);
  return out;
}

NonDiscretenessReport nondiscreteness_report(const TriangleType& t) {
  NonDiscretenessReport r;
  r.type = t;
  const auto re = test_regular_elliptic(t);
  r.tau = re.tau;
  r.discriminant = re.f;
  const double a = std::cos(t.theta);

  r.criteria.push_back({TestKind::regular_elliptic, true, re.fires, re.f});
  {
    CriterionOutcome c{TestKind::jorgensen, is_applicable(TestKind::jorgensen, t.m, t.n), false, 0.0};
    if (c.applicable) {
      c.value = jorgensen_function(t.m, t.n, a);
      c.fires = jorgensen_condition(t);
    }
    r.criteria.push_back(c);
  }
  r.criteria.push_back({TestKind::shimizu, true, shimizu_condition(t),
                        shimizu_function(t.m, t.n, a, std::sin(t.theta))});

  if (t.m.is_infinite() && !t.n.is_infinite()) r.word_3132 = word_3132_analysis(t.n.value(), std::clamp(a, -1.0, 1.0));
  r.certified = !r.firing().empty();
  return r;
}

}  // namespace chtri
