// Command-line front end.
//
// Exit codes: 0 ok, 1 verify-example mismatch, 2 bad input file, 3 numerical failure.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "icosapod/burmester.hpp"
#include "icosapod/error.hpp"
#include "icosapod/example.hpp"
#include "icosapod/io.hpp"
#include "icosapod/motion.hpp"
#include "icosapod/spectrahedra.hpp"

using namespace icosapod;

namespace {

struct Config {
  std::string input;
  std::string out;
  std::uint64_t seed = 1;
  int samples = 1000;
  int steps = 2000;
  int threads = 0;
  double tol_track = TrackOptions{}.tol_track;
  double tol_real = TrackOptions{}.tol_real;
  double tol_trace = TraceOptions{}.tol_trace;
  std::vector<double> line;
  // verify-example
  double tol = 1e-12;
  double perturb_p2 = 0.0;
  // burmester
  std::string compare;
};

NodeOptions node_options(const Config& c) {
  NodeOptions o;
  o.track.tol_track = c.tol_track;
  o.track.tol_real = c.tol_real;
  return o;
}

json echo(const Config& c, const std::string& command) {
  return json{{"command", command},
              {"seed", c.seed},
              {"tol_track", c.tol_track},
              {"tol_real", c.tol_real},
              {"tol_trace", c.tol_trace}};
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

LineR3 line_option(const Config& c, const std::optional<LineR3>& fallback) {
  if (c.line.empty()) {
    if (!fallback) throw Error(ErrorCode::Schema, "no seed line given and none in the input");
    return *fallback;
  }
  if (c.line.size() != 6) throw Error(ErrorCode::Schema, "--line takes c1 c2 c3 u1 u2 u3");
  return LineR3{Vec3(c.line[0], c.line[1], c.line[2]), Vec3(c.line[3], c.line[4], c.line[5])}.canonical();
}

Sym4Space space_input(const Config& c) {
  return c.input.empty() ? example_space() : space_from_json(read_json(c.input));
}

int cmd_verify_example(const Config& c) {
  NumericExample n = to_numeric(worked_example());
  n.platform[1](0) += c.perturb_p2;
  const ExampleCheck chk = verify_example(n, c.tol);
  std::printf("leg  computed d2               printed d2                relative error\n");
  for (int i = 0; i < 6; ++i) {
    std::printf("%d    %-25s %-25s %.3e\n", i + 1, g17(chk.computed[i]).c_str(), g17(chk.expected[i]).c_str(),
                chk.relative_error[i]);
  }
  std::printf("max relative error %.3e, tolerance %.3e: %s\n", chk.max_relative_error, chk.tol,
              chk.pass ? "PASS" : "FAIL");
  if (!c.out.empty()) {
    Pod pod = example_pod();
    pod.legs[1].a = n.platform[1];
    write_json(pod_to_json(pod, json{{"command", "verify-example"}, {"tol", c.tol}}), c.out);
  }
  return chk.pass ? 0 : 1;
}

int cmd_build_pod(const Config& c) {
  const Sym4Space space = space_input(c);
  const LineR3 line = line_option(c, example_pod().provenance.seed_line);
  const BuildResult r = build_pod(space, line, c.seed, node_options(c));
  const BuildReport& rep = r.report;
  std::printf("type (%d,%d), nodes %d\n", rep.type.a, rep.type.b, rep.node_count);
  std::printf("legs: %d real finite, %d at infinity, %d complex\n", rep.real_finite_legs,
              rep.legs_at_infinity, rep.complex_legs);
  std::printf("max seed residual %.3e\n", rep.max_seed_residual);
  std::printf("icosapod conditions: %s\n", rep.dagger.pass() ? "met" : "not met");
  for (const auto& why : rep.dagger.reasons) std::printf("  %s\n", why.c_str());
  if (!c.out.empty()) write_json(pod_to_json(r.pod, echo(c, "build-pod")), c.out);
  return 0;
}

int cmd_trace(const Config& c) {
  if (c.input.empty()) throw Error(ErrorCode::Schema, "trace needs --input pod.json");
  const Pod pod = pod_from_json(read_json(c.input));
  const LineR3 line = line_option(c, pod.provenance.seed_line);
  TraceOptions opt;
  opt.tol_trace = c.tol_trace;
  const Trajectory t = trace(pod, line, c.steps, opt);
  double worst = 0.0;
  for (const auto& m : t.samples) worst = std::max(worst, m.residuals.cwiseAbs().maxCoeff());
  const char* reasons[] = {"steps", "closure", "corank change", "corrector divergence"};
  std::printf("%zu samples, arclength %s, stop: %s%s%s\n", t.samples.size(),
              g17(t.samples.back().s).c_str(), reasons[static_cast<int>(t.reason)],
              t.message.empty() ? "" : ", ", t.message.c_str());
  std::printf("max leg residual %.3e\n", worst);
  if (!c.out.empty()) export_csv(t, c.out);
  return t.reason == TraceStop::CorrectorDivergence ? 3 : 0;
}

int cmd_stats(const Config& c) {
  const SurveyResult s = stats_survey(c.samples, c.seed, c.threads, node_options(c));
  std::printf("samples %d, degenerate %d\n", s.samples, s.degenerate);
  std::printf("real nodes:");
  for (const auto& [k, v] : s.real_points_hist) std::printf(" %d:%d", k, v);
  std::printf("\nreal preimages:");
  for (const auto& [k, v] : s.real_preimage_hist) std::printf(" %d:%d", k, v);
  std::printf("\n");
  if (!c.out.empty()) write_json(stats_to_json(s, echo(c, "stats")), c.out);
  return 0;
}

int cmd_spectra_type(const Config& c) {
  const Sym4Space space = space_input(c);
  const TypeResult r = compute_type(space, c.seed, node_options(c));
  std::printf("type (%d,%d)\n", r.type.a, r.type.b);
  json nodes = json::array();
  for (const auto& n : r.nodes.nodes) {
    json t = json::array();
    for (int i = 0; i < 4; ++i) t.push_back(json::array({n.cluster.point(i).real(), n.cluster.point(i).imag()}));
    nodes.push_back(json{{"t", t}, {"real", n.cluster.real}, {"psd", n.psd.value_or(false)}});
  }
  if (!c.out.empty()) {
    json j = echo(c, "spectra-type");
    j["type"] = json::array({r.type.a, r.type.b});
    j["nodes"] = nodes;
    j["version"] = tool_version();
    write_json(j, c.out);
  }
  return 0;
}

int cmd_burmester(const Config& c) {
  if (c.input.empty()) throw Error(ErrorCode::Schema, "burmester needs --input traj.csv");
  const Trajectory t = read_csv(c.input);
  const auto poses = sample_poses(t, 7);
  TrackOptions opt;
  opt.tol_track = c.tol_track;
  opt.tol_real = c.tol_real;
  const BurmesterResult r = solve_burmester(poses, c.seed, opt);
  std::printf("%zu solutions, multiplicity sum %d, real %d\n", r.solutions.size(), r.multiplicity_sum,
              r.real_count);
  Pod found;
  found.provenance.source = "burmester";
  found.provenance.seed = c.seed;
  for (const auto& s : r.solutions) {
    if (s.real) found.legs.push_back(s.leg());
  }
  found.real_finite = static_cast<int>(found.legs.size());
  found.complex_legs = r.multiplicity_sum - r.real_count;
  int status = 0;
  if (!c.compare.empty()) {
    const Pod ref = pod_from_json(read_json(c.compare));
    double worst = 0.0;
    for (const auto& leg : ref.legs) {
      double best = 1e300;
      for (const auto& l : found.legs) {
        best = std::min(best, std::max({(l.a - leg.a).norm(), (l.b - leg.b).norm(), std::abs(l.d2 - leg.d2)}));
      }
      worst = std::max(worst, best);
    }
    const bool ok = worst < 1e-8 && ref.legs.size() == found.legs.size();
    std::printf("largest distance to %s legs: %.3e (%s)\n", c.compare.c_str(), worst, ok ? "match" : "mismatch");
    status = ok ? 0 : 3;
  }
  if (!c.out.empty()) write_json(pod_to_json(found, echo(c, "burmester")), c.out);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line-symmetric mobile pods: Borel construction, spectrahedra, motion tracing"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--seed", c.seed, "random seed")->capture_default_str();
    s->add_option("--tol-track", c.tol_track, "path tracking tolerance")->capture_default_str();
    s->add_option("--tol-real", c.tol_real, "reality threshold")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify-example", "recompute the published leg lengths");
  verify->add_option("--tol", c.tol, "relative tolerance")->capture_default_str();
  verify->add_option("--perturb-p2", c.perturb_p2, "shift the first coordinate of p2");
  verify->add_option("--out", c.out, "write the hexapod as pod.json");

  auto* build = app.add_subcommand("build-pod", "Borel construction from a space containing E");
  build->add_option("--input", c.input, "space.json (default: the built-in type (10,0) space)");
  build->add_option("--out", c.out, "pod.json");
  build->add_option("--line", c.line, "seed axis c1 c2 c3 u1 u2 u3")->expected(6);
  common(build);

  auto* tr = app.add_subcommand("trace", "trace the line-symmetric self-motion");
  tr->add_option("--input", c.input, "pod.json")->required();
  tr->add_option("--out", c.out, "traj.csv");
  tr->add_option("--steps", c.steps, "maximum number of steps")->capture_default_str();
  tr->add_option("--tol-trace", c.tol_trace, "leg residual tolerance")->capture_default_str();
  tr->add_option("--line", c.line, "start axis c1 c2 c3 u1 u2 u3")->expected(6);

  auto* stats = app.add_subcommand("stats", "reality survey over random Borel subspaces");
  stats->add_option("--samples", c.samples, "number of random spaces")->capture_default_str();
  stats->add_option("--threads", c.threads, "worker threads (0: hardware)");
  stats->add_option("--out", c.out, "stats.json");
  common(stats);

  auto* type = app.add_subcommand("spectra-type", "type (a,b) of a quartic spectrahedron");
  type->add_option("--input", c.input, "space.json (default: the built-in type (10,0) space)");
  type->add_option("--out", c.out, "type report as JSON");
  common(type);

  auto* burm = app.add_subcommand("burmester", "spherical points of 7 poses sampled from a trajectory");
  burm->add_option("--input", c.input, "traj.csv")->required();
  burm->add_option("--out", c.out, "solutions as pod.json");
  burm->add_option("--compare", c.compare, "pod.json whose legs should be recovered");
  common(burm);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify_example(c);
    if (*build) return cmd_build_pod(c);
    if (*tr) return cmd_trace(c);
    if (*stats) return cmd_stats(c);
    if (*type) return cmd_spectra_type(c);
    if (*burm) return cmd_burmester(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool input = e.code() == ErrorCode::Schema || e.code() == ErrorCode::IO;
    return input ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
