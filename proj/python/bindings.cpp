#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "icosapod/burmester.hpp"
#include "icosapod/error.hpp"
#include "icosapod/example.hpp"
#include "icosapod/io.hpp"
#include "icosapod/motion.hpp"
#include "icosapod/spectrahedra.hpp"

namespace py = pybind11;
using namespace icosapod;

namespace {

Sym4Space to_space(const std::vector<Mat4>& basis) {
  if (basis.size() != 4) throw Error(ErrorCode::Schema, "a space needs exactly 4 matrices");
  return Sym4Space::from_basis({basis[0], basis[1], basis[2], basis[3]});
}

std::vector<Mat4> from_space(const Sym4Space& s) { return {s.basis.begin(), s.basis.end()}; }

py::dict leg_dict(const Leg& l) {
  py::dict d;
  d["a"] = l.a;
  d["b"] = l.b;
  d["d2"] = l.d2;
  return d;
}

Pod to_pod(const py::list& legs) {
  Pod pod;
  for (const auto& item : legs) {
    const auto d = item.cast<py::dict>();
    pod.legs.push_back(Leg{d["a"].cast<Vec3>(), d["b"].cast<Vec3>(), d["d2"].cast<double>()});
  }
  pod.real_finite = static_cast<int>(pod.legs.size());
  return pod;
}

py::list legs_list(const Pod& pod) {
  py::list out;
  for (const auto& l : pod.legs) out.append(leg_dict(l));
  return out;
}

py::dict trajectory_dict(const Trajectory& t) {
  const auto n = static_cast<Eigen::Index>(t.samples.size());
  Eigen::VectorXd s(n), res(n);
  Eigen::MatrixXd c(n, 3), u(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& m = t.samples[static_cast<std::size_t>(i)];
    s(i) = m.s;
    c.row(i) = m.line.c.transpose();
    u.row(i) = m.line.u.transpose();
    res(i) = m.residuals.size() ? m.residuals.cwiseAbs().maxCoeff() : 0.0;
  }
  py::dict d;
  d["s"] = s;
  d["c"] = c;
  d["u"] = u;
  d["max_residual"] = res;
  d["closed"] = t.closed;
  d["csv"] = to_csv(t);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Borel construction of line-symmetric mobile pods";
  m.attr("__version__") = tool_version();
  py::register_exception<Error>(m, "IcosapodError", PyExc_RuntimeError);

  m.def(
      "verify_example",
      [](double tol, double perturb_p2) {
        NumericExample n = to_numeric(worked_example());
        n.platform[1](0) += perturb_p2;
        const ExampleCheck c = verify_example(n, tol);
        py::dict d;
        d["computed"] = std::vector<double>(c.computed.begin(), c.computed.end());
        d["expected"] = std::vector<double>(c.expected.begin(), c.expected.end());
        d["relative_error"] = std::vector<double>(c.relative_error.begin(), c.relative_error.end());
        d["max_relative_error"] = c.max_relative_error;
        d["passed"] = c.pass;
        return d;
      },
      py::arg("tol") = 1e-12, py::arg("perturb_p2") = 0.0);

  m.def("example_legs", [] { return legs_list(example_pod()); });
  m.def("example_line", [] {
    const LineR3 l = *example_pod().provenance.seed_line;
    return py::make_tuple(l.c, l.u);
  });
  m.def("example_space", [] { return from_space(example_space()); });
  m.def("random_space_with_E", [](std::uint64_t seed) { return from_space(random_space_with_E(seed)); },
        py::arg("seed"));

  m.def(
      "compute_type",
      [](const std::vector<Mat4>& basis, std::uint64_t seed) {
        const SpectraType t = compute_type(to_space(basis), seed).type;
        return py::make_tuple(t.a, t.b);
      },
      py::arg("basis"), py::arg("seed") = 1);

  m.def(
      "symmetroid_nodes",
      [](const std::vector<Mat4>& basis, std::uint64_t seed) {
        py::list out;
        for (const auto& n : solve_symmetroid_nodes(to_space(basis), seed).nodes) {
          py::dict d;
          d["t"] = Vec4c(n.cluster.point);
          d["matrix"] = Mat4c(n.matrix);
          d["real"] = n.cluster.real;
          d["psd"] = n.psd ? py::object(py::bool_(*n.psd)) : py::object(py::none());
          d["multiplicity"] = n.cluster.multiplicity;
          d["rank_ratio"] = n.rank_ratio;
          out.append(d);
        }
        return out;
      },
      py::arg("basis"), py::arg("seed") = 1);

  m.def(
      "adapt_contain_E",
      [](const std::vector<Mat4>& basis, std::uint64_t seed) {
        return from_space(adapt_contain_E(to_space(basis), seed));
      },
      py::arg("basis"), py::arg("seed") = 1);

  m.def(
      "build_pod",
      [](const std::vector<Mat4>& basis, const Vec3& c, const Vec3& u, std::uint64_t seed) {
        const BuildResult r = build_pod(to_space(basis), LineR3{c, u}, seed);
        py::dict d;
        d["legs"] = legs_list(r.pod);
        d["type"] = py::make_tuple(r.report.type.a, r.report.type.b);
        d["real_finite_legs"] = r.report.real_finite_legs;
        d["legs_at_infinity"] = r.report.legs_at_infinity;
        d["complex_legs"] = r.report.complex_legs;
        d["max_seed_residual"] = r.report.max_seed_residual;
        d["icosapod"] = r.report.dagger.pass();
        d["json"] = pod_to_json(r.pod).dump(2);
        return d;
      },
      py::arg("basis"), py::arg("c"), py::arg("u"), py::arg("seed") = 1);

  m.def(
      "trace",
      [](const py::list& legs, const Vec3& c, const Vec3& u, int steps, double tol_trace) {
        TraceOptions opt;
        opt.tol_trace = tol_trace;
        return trajectory_dict(trace(to_pod(legs), LineR3{c, u}, steps, opt));
      },
      py::arg("legs"), py::arg("c"), py::arg("u"), py::arg("steps") = 2000,
      py::arg("tol_trace") = 1e-9);

  m.def(
      "burmester_from_trace",
      [](const py::list& legs, const Vec3& c, const Vec3& u, std::uint64_t seed) {
        const Trajectory t = trace(to_pod(legs), LineR3{c, u}, 2000);
        const BurmesterResult r = solve_burmester(sample_poses(t, 7), seed);
        py::list real;
        for (const auto& s : r.solutions) {
          if (s.real) real.append(leg_dict(s.leg()));
        }
        py::dict d;
        d["multiplicity_sum"] = r.multiplicity_sum;
        d["real_count"] = r.real_count;
        d["real_legs"] = real;
        return d;
      },
      py::arg("legs"), py::arg("c"), py::arg("u"), py::arg("seed") = 1);

  m.def(
      "stats",
      [](int samples, std::uint64_t seed, int threads) {
        const SurveyResult s = stats_survey(samples, seed, threads);
        py::dict d;
        d["samples"] = s.samples;
        d["seed"] = s.seed;
        d["real_points_hist"] = s.real_points_hist;
        d["real_preimage_hist"] = s.real_preimage_hist;
        d["degenerate"] = s.degenerate;
        return d;
      },
      py::arg("samples"), py::arg("seed") = 1, py::arg("threads") = 0);
}
