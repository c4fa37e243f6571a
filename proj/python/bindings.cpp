#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chtri/classify.hpp"
#include "chtri/cli.hpp"
#include "chtri/cyclotomic.hpp"
#include "chtri/discreteness.hpp"
#include "chtri/galois.hpp"
#include "chtri/heisenberg.hpp"
#include "chtri/triangle.hpp"

namespace py = pybind11;
using namespace chtri;

namespace {

// Orders arrive as ints or as "inf".
VertexOrder to_order(const py::object& o) {
  if (py::isinstance<py::str>(o)) return VertexOrder::parse(o.cast<std::string>());
  if (py::isinstance<py::float_>(o) && std::isinf(o.cast<double>())) return VertexOrder::infinity();
  return VertexOrder(o.cast<int>());
}

py::object from_order(const VertexOrder& p) {
  if (p.is_infinite()) return py::str("inf");
  return py::int_(p.value());
}

py::dict class_dict(const IsometryClass& c) {
  py::dict d;
  d["kind"] = std::string(to_string(c.kind));
  d["trace"] = c.trace;
  d["discriminant"] = c.discriminant;
  d["eigenvalues"] = std::vector<Complex>(c.eigenvalues.begin(), c.eigenvalues.end());
  return d;
}

py::dict diag_dict(const CandidateDiagnostics& d) {
  py::dict out;
  out["candidate"] = py::make_tuple(d.candidate.l, d.candidate.k1, d.candidate.k2, d.candidate.k3);
  out["tau"] = d.tau;
  out["discriminant"] = d.discriminant;
  out["circle_residual"] = d.circle_residual;
  out["phi_holds"] = d.phi.holds;
  out["modulus"] = d.galois.modulus;
  out["checked"] = d.galois.checked;
  out["max_conjugate_real"] = d.galois.max_conjugate_real;
  out["max_circle_right"] = d.galois.max_circle_right;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Complex hyperbolic (m, n, inf) triangle groups";

  m.def("discriminant", &discriminant, py::arg("trace"));

  m.def(
      "classify",
      [](const Eigen::Matrix3cd& mat) { return class_dict(classify(GroupElement(mat))); }, py::arg("matrix"),
      "Isometry class of a 3x3 complex matrix preserving diag(1, 1, -1).");

  m.def(
      "involutions",
      [](const py::object& mo, const py::object& no, double theta) {
        const TriangleGroup g = build_triangle({to_order(mo), to_order(no), theta});
        std::vector<Eigen::Matrix3cd> out;
        for (const auto& i : g.involution) out.push_back(i.matrix());
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("theta"));

  m.def(
      "word",
      [](const py::object& mo, const py::object& no, double theta, const std::string& w) {
        return build_triangle({to_order(mo), to_order(no), theta}).word(w).matrix();
      },
      py::arg("m"), py::arg("n"), py::arg("theta"), py::arg("word"));

  m.def(
      "classify_word",
      [](const py::object& mo, const py::object& no, double theta, const std::string& w) {
        return class_dict(classify(build_triangle({to_order(mo), to_order(no), theta}).word(w)));
      },
      py::arg("m"), py::arg("n"), py::arg("theta"), py::arg("word"));

  m.def(
      "trace_123_closed_form",
      [](const py::object& mo, const py::object& no, double theta) {
        return trace_123_closed_form(to_order(mo), to_order(no), theta);
      },
      py::arg("m"), py::arg("n"), py::arg("theta"));

  m.def(
      "isometric_sphere",
      [](const Eigen::Matrix3cd& mat) {
        const IsometricSphere s = isometric_sphere(GroupElement(mat));
        return py::make_tuple(py::make_tuple(s.center.xi, s.center.v), s.radius);
      },
      py::arg("matrix"), "((xi, v), radius) of the isometric sphere.");

  m.def(
      "scan_intervals",
      [](const std::string& test, const py::object& mo, const py::object& no, int grid, double tol) {
        const auto kind = parse_test_kind(test);
        if (!kind) throw py::value_error("test must be re, jorgensen or shimizu");
        const ScanResult r = scan_intervals(*kind, to_order(mo), to_order(no), {grid, tol});
        std::vector<std::pair<double, double>> out;
        for (const auto& i : r.intervals) out.emplace_back(i.lo, i.hi);
        return out;
      },
      py::arg("test"), py::arg("m"), py::arg("n"), py::arg("grid") = 100000, py::arg("tol") = 1e-10);

  m.def(
      "reproduce_table",
      [](int which) {
        const Table t = reproduce_table(which);
        py::dict rows;
        for (const auto& r : t.rows) rows[py::int_(r.n)] = r.values;
        py::dict d;
        d["caption"] = t.caption;
        d["columns"] = t.columns;
        d["rows"] = rows;
        d["notes"] = t.notes;
        return d;
      },
      py::arg("which"));

  m.def("order_k_locus", &order_k_locus, py::arg("n"), py::arg("k"));

  m.def(
      "nondiscreteness_report",
      [](const py::object& mo, const py::object& no, double theta) {
        const NonDiscretenessReport r = nondiscreteness_report({to_order(mo), to_order(no), theta});
        py::dict d;
        d["tau"] = r.tau;
        d["discriminant"] = r.discriminant;
        std::vector<std::string> firing;
        for (TestKind t : r.firing()) firing.emplace_back(to_string(t));
        d["firing"] = firing;
        d["certified"] = r.certified;
        return d;
      },
      py::arg("m"), py::arg("n"), py::arg("theta"));

  m.def("euler_phi", &euler_phi, py::arg("d"));
  m.def("lemma32_bound", &lemma32_bound, py::arg("s1"), py::arg("s2"));
  m.def(
      "phi_inequality",
      [](std::int64_t l, std::int64_t k1, std::int64_t k2, std::int64_t k3) {
        const PhiInequality p = phi_inequality(l, k1, k2, k3);
        return py::make_tuple(py::make_tuple(p.d1, p.d2, p.d3), p.holds);
      },
      py::arg("l"), py::arg("k1"), py::arg("k2"), py::arg("k3"));
  m.def(
      "primitive_root_sum", [](std::int64_t d) { return primitive_root_sum(d).evaluate(); }, py::arg("d"));

  m.def(
      "refute_finite_order",
      [](const py::object& mo, const py::object& no, std::int64_t max_l) {
        RefutationReport r;
        {
          py::gil_scoped_release release;
          RefuteOptions opts;
          opts.max_l = max_l;
          r = refute_finite_order(to_order(mo), to_order(no), opts);
        }
        py::dict d;
        d["m"] = from_order(r.m);
        d["n"] = from_order(r.n);
        d["candidates_examined"] = r.candidates_examined;
        py::list surv, near;
        for (const auto& x : r.survivors) surv.append(diag_dict(x));
        for (const auto& x : r.near_misses) near.append(diag_dict(x));
        d["survivors"] = surv;
        d["near_misses"] = near;
        d["unchecked_overflow"] = r.unchecked_overflow.size();
        d["lemma32_spot_check"] = r.lemma32_spot_check;
        d["runtime_seconds"] = r.runtime_seconds;
        return d;
      },
      py::arg("m"), py::arg("n"), py::arg("max_l") = 60);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");

  m.attr("__version__") = CHTRI_VERSION;
}
