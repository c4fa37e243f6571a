#include "chtri/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "chtri/classify.hpp"
#include "chtri/discreteness.hpp"
#include "chtri/galois.hpp"
#include "chtri/triangle.hpp"

#ifndef CHTRI_VERSION
#define CHTRI_VERSION "0.0.0"
#endif

namespace chtri::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<double> parse_number(std::string_view s) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(x)) return std::nullopt;
  return x;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::string fmt(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt5(const std::optional<double>& x) {
  if (!x) return "---";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.5f", *x);
  return buf;
}

Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(fmt(x).c_str(), nullptr);
}

Json cnum(Complex z) { return Json{{"re", num(z.real())}, {"im", num(z.imag())}}; }

Json matrix_json(const GroupElement& g) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(cnum(g(r, c)));
    rows.push_back(row);
  }
  return rows;
}

std::string order_text(const VertexOrder& p) { return p.is_infinite() ? "inf" : std::to_string(p.value()); }

VertexOrder order_arg(const std::string& text, std::string_view flag) {
  try {
    return VertexOrder::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": expected an integer >= 2 or 'inf', got '" + text + "'");
  }
}

double angle_arg(const std::string& text) {
  const auto theta = parse_angle(text);
  if (!theta) throw UsageError("--theta: expected pi/<k>, acos(<x>) or radians, got '" + text + "'");
  return *theta;
}

Json base_tolerances() {
  return Json{{"unitary", tol::unitary},        {"null_band", tol::null_band}, {"discriminant", tol::discriminant},
              {"rank", tol::rank},              {"eigen_modulus", tol::eigen_modulus},
              {"shimizu", tol::shimizu}};
}

struct Output {
  Json parameters = Json::object();
  Json results = Json::object();
  Json tolerances = base_tolerances();
  std::ostringstream csv;
};

void csv_kv(std::ostream& os, std::string_view key, const std::string& value) { os << key << ',' << value << '\n'; }

// --- classify ---------------------------------------------------------------

struct ClassifyArgs {
  std::string m = "inf", n, theta, word = "123";
};

void cmd_classify(const ClassifyArgs& a, Output& o) {
  if (!valid_word(a.word)) throw UsageError("--word: expected a nonempty word over {1,2,3}, got '" + a.word + "'");
  if (a.n.empty()) throw UsageError("--n is required");
  if (a.theta.empty()) throw UsageError("--theta is required");
  const TriangleType type{order_arg(a.m, "--m"), order_arg(a.n, "--n"), angle_arg(a.theta)};
  const TriangleGroup group = build_triangle(type);
  const GroupElement g = group.word(a.word);
  const IsometryClass cls = classify(g);

  o.parameters = Json{{"m", order_text(type.m)}, {"n", order_text(type.n)}, {"theta", num(type.theta)},
                      {"a", num(type.a())},      {"word", a.word}};
  Json eig = Json::array();
  for (Complex z : cls.eigenvalues) eig.push_back(cnum(z));
  o.results = Json{{"trace", cnum(cls.trace)},
                   {"discriminant", num(cls.discriminant)},
                   {"class", std::string(to_string(cls.kind))},
                   {"eigenvalues", eig},
                   {"matrix", matrix_json(g)}};

  o.csv << "key,value\n";
  csv_kv(o.csv, "word", a.word);
  csv_kv(o.csv, "trace_re", fmt(cls.trace.real()));
  csv_kv(o.csv, "trace_im", fmt(cls.trace.imag()));
  csv_kv(o.csv, "discriminant", fmt(cls.discriminant));
  csv_kv(o.csv, "class", std::string(to_string(cls.kind)));
}

// --- scan -------------------------------------------------------------------

struct ScanArgs {
  std::string test, m, n;
  ScanOptions opts;
};

TestKind test_arg(const std::string& text) {
  const auto t = parse_test_kind(text);
  if (!t) throw UsageError("--test: expected re, jorgensen or shimizu, got '" + text + "'");
  return *t;
}

void cmd_scan(const ScanArgs& a, Output& o) {
  const TestKind test = test_arg(a.test);
  const VertexOrder m = order_arg(a.m, "--m"), n = order_arg(a.n, "--n");
  const ScanResult r = scan_intervals(test, m, n, a.opts);

  o.parameters = Json{{"test", std::string(to_string(test))}, {"m", order_text(m)}, {"n", order_text(n)},
                      {"grid", a.opts.grid}};
  o.tolerances["bisection"] = a.opts.tol;
  Json iv = Json::array();
  for (const Interval& i : r.intervals) iv.push_back(Json{{"lo", num(i.lo)}, {"hi", num(i.hi)}});
  o.results = Json{{"applicable", r.applicable}, {"intervals", iv}, {"endpoint_tolerance", num(r.endpoint_tolerance)}};

  o.csv << "n,lo,hi\n";
  for (const Interval& i : r.intervals) o.csv << order_text(n) << ',' << fmt(i.lo) << ',' << fmt(i.hi) << '\n';
}

// --- tables -----------------------------------------------------------------

struct TablesArgs {
  int which = 1;
  ScanOptions opts;
};

void cmd_tables(const TablesArgs& a, Output& o) {
  const Table t = reproduce_table(a.which, a.opts);

  o.parameters = Json{{"which", a.which}, {"grid", a.opts.grid}};
  o.tolerances["bisection"] = a.opts.tol;
  Json rows = Json::array();
  for (const TableRow& row : t.rows) {
    Json values = Json::object(), display = Json::object();
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      values[t.columns[c]] = row.values[c] ? num(*row.values[c]) : Json(nullptr);
      display[t.columns[c]] = fmt5(row.values[c]);
    }
    rows.push_back(Json{{"n", row.n}, {"values", values}, {"display", display}});
  }
  o.results = Json{{"caption", t.caption}, {"columns", t.columns}, {"rows", rows}, {"notes", t.notes}};

  o.csv << 'n';
  for (const auto& c : t.columns) o.csv << ',' << c;
  for (const auto& c : t.columns) o.csv << ',' << c << "_display";
  o.csv << '\n';
  for (const TableRow& row : t.rows) {
    o.csv << row.n;
    for (const auto& v : row.values) o.csv << ',' << (v ? fmt(*v) : std::string("---"));
    for (const auto& v : row.values) o.csv << ',' << fmt5(v);
    o.csv << '\n';
  }
}

// --- galois -----------------------------------------------------------------

struct GaloisArgs {
  std::string m, n;
  RefuteOptions opts;
};

struct Refusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string candidate_text(const CandidateTrace& c) {
  return std::to_string(c.l) + ":" + std::to_string(c.k1) + ":" + std::to_string(c.k2) + ":" + std::to_string(c.k3);
}

Json candidate_json(const CandidateTrace& c) { return Json{{"l", c.l}, {"k", {c.k1, c.k2, c.k3}}}; }

Json diagnostics_json(const CandidateDiagnostics& d) {
  const GaloisCheck& g = d.galois;
  Json galois{{"modulus", g.modulus}, {"checked", g.checked}, {"automorphisms", g.automorphisms}};
  if (g.checked) {
    galois["max_conjugate_real"] = num(g.max_conjugate_real);
    galois["contradiction_k"] = g.contradiction_k ? Json(*g.contradiction_k) : Json(nullptr);
    galois["max_circle_right"] = num(g.max_circle_right);
    galois["max_lemma32_bound"] = num(g.max_lemma32_bound);
  }
  return Json{{"candidate", candidate_json(d.candidate)},
              {"tau", cnum(d.tau)},
              {"discriminant", num(d.discriminant)},
              {"circle_residual", num(d.circle_residual)},
              {"phi", Json{{"d", {d.phi.d1, d.phi.d2, d.phi.d3}}, {"sum", num(d.phi.sum)}, {"holds", d.phi.holds}}},
              {"galois", galois}};
}

void cmd_galois(const GaloisArgs& a, Output& o) {
  const VertexOrder m = order_arg(a.m, "--m"), n = order_arg(a.n, "--n");
  if (m == n)
    throw Refusal("galois: m = n is not handled here; the (n, n, inf) case is deferred to its existing "
                  "classification in the literature");
  const RefutationReport r = refute_finite_order(m, n, a.opts);

  o.parameters = Json{{"m", order_text(m)}, {"n", order_text(n)}, {"max_l", a.opts.max_l},
                      {"modulus_cap", a.opts.modulus_cap}};
  o.tolerances["circle_strict"] = a.opts.strict_tol;
  o.tolerances["circle_near_miss"] = a.opts.near_miss_tol;

  Json survivors = Json::array(), near = Json::array(), overflow = Json::array();
  for (const auto& d : r.survivors) survivors.push_back(diagnostics_json(d));
  for (const auto& d : r.near_misses) near.push_back(diagnostics_json(d));
  for (const auto& c : r.unchecked_overflow) overflow.push_back(candidate_json(c));
  o.results = Json{{"candidates_examined", r.candidates_examined},
                   {"survivor_count", r.survivors.size()},
                   {"survivors", survivors},
                   {"near_misses", near},
                   {"unchecked_overflow", overflow},
                   {"lemma32_spot_check",
                    Json{{"holds", r.lemma32_spot_check},
                         {"evaluations", r.lemma32_evaluations},
                         {"max_circle_right", num(r.lemma32_max)}}},
                   {"runtime_seconds", num(r.runtime_seconds)}};

  o.csv << "key,value\n";
  csv_kv(o.csv, "m", order_text(m));
  csv_kv(o.csv, "n", order_text(n));
  csv_kv(o.csv, "max_l", std::to_string(a.opts.max_l));
  csv_kv(o.csv, "candidates_examined", std::to_string(r.candidates_examined));
  csv_kv(o.csv, "survivors", std::to_string(r.survivors.size()));
  csv_kv(o.csv, "near_misses", std::to_string(r.near_misses.size()));
  csv_kv(o.csv, "unchecked_overflow", std::to_string(r.unchecked_overflow.size()));
  csv_kv(o.csv, "lemma32_spot_check", r.lemma32_spot_check ? "true" : "false");
  csv_kv(o.csv, "lemma32_evaluations", std::to_string(r.lemma32_evaluations));
  csv_kv(o.csv, "runtime_seconds", fmt(r.runtime_seconds));
  for (const auto& d : r.survivors) csv_kv(o.csv, "survivor", candidate_text(d.candidate));
  for (const auto& c : r.unchecked_overflow) csv_kv(o.csv, "overflow", candidate_text(c));
}

// --- report -----------------------------------------------------------------

struct ReportArgs {
  std::string m, n, theta;
};

void cmd_report(const ReportArgs& a, Output& o) {
  const TriangleType type{order_arg(a.m, "--m"), order_arg(a.n, "--n"), angle_arg(a.theta)};
  const NonDiscretenessReport r = nondiscreteness_report(type);

  o.parameters = Json{{"m", order_text(type.m)}, {"n", order_text(type.n)}, {"theta", num(type.theta)},
                      {"a", num(type.a())}};
  Json criteria = Json::array();
  for (const CriterionOutcome& c : r.criteria)
    criteria.push_back(Json{{"test", std::string(to_string(c.test))},
                            {"applicable", c.applicable},
                            {"fires", c.fires},
                            {"value", num(c.value)}});
  o.results = Json{{"tau", cnum(r.tau)}, {"discriminant", num(r.discriminant)}, {"criteria", criteria}};
  if (r.word_3132)
    o.results["word_3132"] =
        Json{{"trace", num(r.word_3132->trace)}, {"class", std::string(to_string(r.word_3132->kind))}};
  o.results["certified"] = r.certified;
  o.results["verdict"] = r.verdict();

  o.csv << "key,value\n";
  csv_kv(o.csv, "tau_re", fmt(r.tau.real()));
  csv_kv(o.csv, "tau_im", fmt(r.tau.imag()));
  csv_kv(o.csv, "discriminant", fmt(r.discriminant));
  for (const CriterionOutcome& c : r.criteria)
    csv_kv(o.csv, to_string(c.test), !c.applicable ? "not_applicable" : (c.fires ? "fires" : "silent"));
  if (r.word_3132) csv_kv(o.csv, "word_3132_class", std::string(to_string(r.word_3132->kind)));
  csv_kv(o.csv, "verdict", r.verdict());
}

void add_scan_options(CLI::App* sub, ScanOptions& opts) {
  sub->add_option("--grid", opts.grid, "Uniform grid cells in a = cos(theta), >= 1000")->capture_default_str();
  sub->add_option("--tol", opts.tol, "Bisection bracket width for endpoints, in (0, 1e-6]")->capture_default_str();
}

}  // namespace

std::optional<double> parse_angle(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) return std::nullopt;
  if (s.starts_with("acos(") && s.ends_with(")")) {
    const auto x = parse_number(trim(std::string_view(s).substr(5, s.size() - 6)));
    if (!x || std::abs(*x) > 1.0) return std::nullopt;
    return std::acos(*x);
  }
  static const std::regex pi_form(R"(^([0-9]*\.?[0-9]+)?\*?pi(?:/([0-9]*\.?[0-9]+))?$)");
  std::smatch match;
  if (std::regex_match(s, match, pi_form)) {
    const double c = match[1].matched ? *parse_number(match[1].str()) : 1.0;
    const double k = match[2].matched ? *parse_number(match[2].str()) : 1.0;
    if (k == 0.0) return std::nullopt;
    return c * std::numbers::pi / k;
  }
  return parse_number(s);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Complex hyperbolic (m, n, inf) triangle groups: isometry classification, discreteness scans, "
               "table reproduction and a Galois refutation search",
               "chtri"};
  app.set_version_flag("--version", CHTRI_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "csv";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a word in the involutions I1, I2, I3");
  classify_cmd->add_option("--m", ca.m, "Order m (integer >= 3 or inf)")->capture_default_str();
  classify_cmd->add_option("--n", ca.n, "Order n (integer >= 3 or inf)");
  classify_cmd->add_option("--theta", ca.theta, "Angular invariant: pi/<k>, acos(<x>) or radians");
  classify_cmd->add_option("--word", ca.word, "Word over {1,2,3}, e.g. 123 or 3132")->capture_default_str();

  ScanArgs sa;
  auto* scan_cmd = app.add_subcommand("scan", "Intervals in a = cos(theta) where a criterion fires");
  scan_cmd->add_option("--test", sa.test, "re, jorgensen or shimizu")->required();
  scan_cmd->add_option("--m", sa.m, "Order m (integer or inf)")->required();
  scan_cmd->add_option("--n", sa.n, "Order n (integer or inf)")->required();
  add_scan_options(scan_cmd, sa.opts);

  TablesArgs ta;
  auto* tables_cmd = app.add_subcommand("tables", "Reproduce interval table 1, 2 or 3");
  tables_cmd->add_option("which", ta.which, "Table number")->required()->check(CLI::Range(1, 3));
  add_scan_options(tables_cmd, ta.opts);

  GaloisArgs ga;
  auto* galois_cmd = app.add_subcommand("galois", "Refute finite-order regular elliptic I1I2I3 for l <= L");
  galois_cmd->add_option("--m", ga.m, "Order m (integer >= 3 or inf)")->required();
  galois_cmd->add_option("--n", ga.n, "Order n (integer >= 3)")->required();
  galois_cmd->add_option("--max-l", ga.opts.max_l, "Largest root-of-unity order l, <= 2000")->capture_default_str();
  galois_cmd->add_option("--tol", ga.opts.strict_tol, "Circle tolerance for survivors")->capture_default_str();
  galois_cmd->add_option("--near-tol", ga.opts.near_miss_tol, "Circle tolerance for near misses")
      ->capture_default_str();
  galois_cmd->add_option("--modulus-cap", ga.opts.modulus_cap, "Largest cyclotomic modulus N checked")
      ->capture_default_str();

  ReportArgs ra;
  auto* report_cmd = app.add_subcommand("report", "Run every applicable non-discreteness criterion");
  report_cmd->add_option("--m", ra.m, "Order m (integer >= 3 or inf)")->required();
  report_cmd->add_option("--n", ra.n, "Order n (integer >= 3 or inf)")->required();
  report_cmd->add_option("--theta", ra.theta, "Angular invariant: pi/<k>, acos(<x>) or radians")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e, out, err);
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return exit_usage;
  }

  Output o;
  std::string command;
  try {
    if (classify_cmd->parsed()) {
      command = "classify";
      cmd_classify(ca, o);
    } else if (scan_cmd->parsed()) {
      command = "scan";
      cmd_scan(sa, o);
    } else if (tables_cmd->parsed()) {
      command = "tables";
      cmd_tables(ta, o);
    } else if (galois_cmd->parsed()) {
      command = "galois";
      cmd_galois(ga, o);
    } else {
      command = "report";
      cmd_report(ra, o);
    }
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << "\n";
    return exit_usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return exit_failure;
  }

  if (format == "json") {
    const Json record{{"command", command},       {"argv", args},          {"parameters", o.parameters},
                      {"results", o.results},     {"version", CHTRI_VERSION}, {"tolerances", o.tolerances}};
    out << record.dump(2) + "\n" << std::flush;
  } else {
    out << o.csv.str() << std::flush;
  }
  return exit_ok;
}

}  // namespace chtri::cli
