// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <Eigen/Dense>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "icosapod/borel.hpp"
#include "icosapod/burmester.hpp"
#include "icosapod/error.hpp"
#include "icosapod/example.hpp"
#include "icosapod/motion.hpp"
#include "icosapod/nodes.hpp"
#include "icosapod/spectrahedra.hpp"

using namespace icosapod;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Verdict()>& body) {
  const auto t0 = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  if (!v.pass) ++failures;
  std::printf("criterion %d %-28s %s (%.2f s)%s%s\n", id, name.c_str(), v.pass ? "PASS" : "FAIL",
              seconds_since(t0), v.detail.empty() ? "" : " : ", v.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Mat4 random_symmetric(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = n(rng);
  return 0.5 * (g + g.transpose());
}

Vec4 random_vec4(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng), n(rng), n(rng)};
}

LineR3 random_line(std::mt19937_64& rng) {
  const Vec4 c = random_vec4(rng), u = random_vec4(rng);
  return LineR3{c.head<3>(), u.head<3>()}.canonical();
}

double projective_distance(const Mat4c& a, const Mat4c& b) {
  const Complex s = (b.conjugate().cwiseProduct(a)).sum() / b.squaredNorm();
  return (a - s * b).norm() / a.norm();
}

// greedy matching of two point multisets
bool same_multiset(std::vector<Vec3> a, std::vector<Vec3> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a) {
    auto it = std::min_element(b.begin(), b.end(), [&](const Vec3& x, const Vec3& y) {
      return (x - p).norm() < (y - p).norm();
    });
    if (it == b.end() || (*it - p).norm() > tol) return false;
    b.erase(it);
  }
  return true;
}

Verdict criterion_1() {
  Verdict v;
  const auto t0 = Clock::now();
  const ExampleCheck c = verify_example(to_numeric(worked_example()), 1e-12);
  const double dt = seconds_since(t0);
  v.require(c.pass, "relative error " + fmt("%.3g", c.max_relative_error));
  v.require(dt < 1.0, "runtime " + fmt("%.3g", dt) + " s");
  v.detail += (v.detail.empty() ? "" : "; ") + std::string("max rel err ") + fmt("%.2e", c.max_relative_error);
  return v;
}

Verdict criterion_2() {
  Verdict v;
  const Pod pod = example_pod();
  const auto t0 = Clock::now();
  const Trajectory t = trace(pod, *pod.provenance.seed_line, 2000);
  const double dt = seconds_since(t0);
  double worst = 0.0;
  bool involutions = true;
  for (const auto& m : t.samples) {
    worst = std::max(worst, m.residuals.cwiseAbs().maxCoeff());
    involutions = involutions && is_involution_point(m.sigma);
  }
  v.require(t.samples.size() >= 200, std::to_string(t.samples.size()) + " samples");
  v.require(worst < 1e-9, "max residual " + fmt("%.3g", worst));
  v.require(involutions, "a sample is not a half-turn");
  v.require(dt < 10.0, "runtime " + fmt("%.3g", dt) + " s");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(t.samples.size()) +
              " samples, max residual " + fmt("%.2e", worst) + (t.closed ? ", closed" : "");
  return v;
}

Verdict criterion_3() {
  Verdict v;
  int ten = 0;
  double worst_rank = 0.0, slowest = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Sym4Space s = random_space_with_E(derive_seed(3, i));
    const auto t0 = Clock::now();
    try {
      const NodeResult r = solve_symmetroid_nodes(s, derive_seed(30, i));
      if (r.multiplicity_sum == 10) ++ten;
      for (const auto& n : r.nodes) worst_rank = std::max(worst_rank, n.rank_ratio);
    } catch (const Error&) {
    }
    slowest = std::max(slowest, seconds_since(t0));
  }
  v.require(ten >= 95, std::to_string(ten) + "/100 with multiplicity sum 10");
  v.require(worst_rank < 1e-8, "rank ratio " + fmt("%.3g", worst_rank));
  v.require(slowest < 1.0, "slowest instance " + fmt("%.3g", slowest) + " s");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(ten) + "/100 sum 10, max s3/s1 " +
              fmt("%.2e", worst_rank) + ", slowest " + fmt("%.3f", slowest) + " s";
  return v;
}

Verdict criterion_4() {
  Verdict v;
  std::mt19937_64 rng(4);
  int recovered = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Vec4 a = random_vec4(rng), b = random_vec4(rng);
    const Mat4 plant = a * b.transpose() + b * a.transpose();
    const Sym4Space s =
        Sym4Space::from_basis({matrix_E(), plant, random_symmetric(rng), random_symmetric(rng)});
    double best = 1.0;
    try {
      const NodeResult r = solve_symmetroid_nodes(s, derive_seed(40, i));
      for (const auto& n : r.nodes) best = std::min(best, projective_distance(n.matrix, plant.cast<Complex>()));
    } catch (const Error&) {
    }
    worst = std::max(worst, best);
    if (best < 1e-8) ++recovered;
  }
  v.require(recovered == 50, std::to_string(recovered) + "/50 recovered");
  v.detail += (v.detail.empty() ? "" : "; ") + std::string("worst distance ") + fmt("%.2e", worst);
  return v;
}

Verdict criterion_5() {
  Verdict v;
  const auto t0 = Clock::now();
  const SurveyResult s = stats_survey(1000, 1);
  const double dt = seconds_since(t0);
  int mode = -1, mode_count = -1, valid = 0;
  bool even = true;
  for (const auto& [k, c] : s.real_points_hist) {
    even = even && k % 2 == 0;
    valid += c;
    if (c > mode_count) mode = k, mode_count = c;
  }
  const int bin2 = s.real_points_hist.count(2) ? s.real_points_hist.at(2) : 0;
  bool mult4 = true;
  for (const auto& [k, c] : s.real_preimage_hist) mult4 = mult4 && k % 4 == 0;
  v.require(even, "odd real-node bin");
  v.require(mode == 6 || mode == 8, "mode " + std::to_string(mode));
  v.require(bin2 < 0.01 * valid, "bin 2 has " + std::to_string(bin2));
  v.require(mult4, "preimage bin not a multiple of 4");
  v.require(s.real_preimage_hist.count(20) == 0, "20 real preimages observed");
  v.require(dt < 1200.0, "runtime " + fmt("%.0f", dt) + " s");
  std::string h = "nodes {";
  for (const auto& [k, c] : s.real_points_hist) h += std::to_string(k) + ":" + std::to_string(c) + " ";
  h += "} preimages {";
  for (const auto& [k, c] : s.real_preimage_hist) h += std::to_string(k) + ":" + std::to_string(c) + " ";
  h += "} degenerate " + std::to_string(s.degenerate);
  v.detail += (v.detail.empty() ? "" : "; ") + h;
  return v;
}

struct Icosapod {
  BuildResult built;
  Trajectory traj;
};

const Icosapod& icosapod() {
  static const Icosapod ico = [] {
    Icosapod r;
    const Pod hexapod = example_pod();
    r.built = build_pod(example_space(), *hexapod.provenance.seed_line, 1);
    r.traj = trace(r.built.pod, *hexapod.provenance.seed_line, 2000);
    return r;
  }();
  return ico;
}

Verdict criterion_6() {
  Verdict v;
  const Icosapod& ico = icosapod();
  const Pod& pod = ico.built.pod;
  v.require(pod.real_finite == 20 && pod.legs.size() == 20,
            std::to_string(pod.real_finite) + " real finite legs");
  double worst = 0.0;
  for (const auto& m : ico.traj.samples) worst = std::max(worst, m.residuals.cwiseAbs().maxCoeff());
  v.require(ico.traj.samples.size() >= 100, std::to_string(ico.traj.samples.size()) + " samples");
  v.require(worst < 1e-8, "max residual " + fmt("%.3g", worst));
  std::vector<Vec3> base, platform;
  for (const auto& l : pod.legs) base.push_back(l.b), platform.push_back(l.a);
  v.require(same_multiset(base, platform, 1e-12), "base and platform multisets differ");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(pod.legs.size()) + " legs, " +
              std::to_string(ico.traj.samples.size()) + " samples, max residual " + fmt("%.2e", worst);
  return v;
}

Verdict criterion_7() {
  Verdict v;
  const Icosapod& ico = icosapod();
  const BurmesterResult r = solve_burmester(sample_poses(ico.traj, 7), 7);
  v.require(r.multiplicity_sum == 20, "multiplicity sum " + std::to_string(r.multiplicity_sum));
  double worst = 0.0;
  for (const auto& leg : ico.built.pod.legs) {
    double best = 1e300;
    for (const auto& s : r.solutions) {
      if (!s.real) continue;
      const Leg l = s.leg();
      best = std::min(best, std::max({(l.a - leg.a).norm(), (l.b - leg.b).norm(), std::abs(l.d2 - leg.d2)}));
    }
    worst = std::max(worst, best);
  }
  v.require(worst < 1e-8, "leg mismatch " + fmt("%.3g", worst));

  std::mt19937_64 rng(77);
  std::normal_distribution<double> n(0.0, 1.0);
  int twenty = 0, even = 0;
  const int trials = 5;
  for (int k = 0; k < trials; ++k) {
    std::vector<StudyPoint> poses;
    for (int i = 0; i < 7; ++i) {
      const Eigen::Quaterniond q(n(rng), n(rng), n(rng), n(rng));
      poses.push_back(embed_isometry(q.normalized().toRotationMatrix(), Vec3(n(rng), n(rng), n(rng))));
    }
    const BurmesterResult rr = solve_burmester(poses, derive_seed(70, k));
    if (rr.multiplicity_sum == 20) ++twenty;
    if (rr.real_count % 2 == 0) ++even;
  }
  v.require(twenty == trials, std::to_string(twenty) + "/" + std::to_string(trials) + " random pose sets with 20");
  v.require(even == trials, "odd real count");
  v.detail += (v.detail.empty() ? "" : "; ") + std::string("icosapod legs matched to ") + fmt("%.2e", worst) +
              ", random poses " + std::to_string(twenty) + "/" + std::to_string(trials) + " with 20";
  return v;
}

Verdict criterion_8() {
  Verdict v;
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n(0.0, 1.0);

  // double complement
  bool dc = true;
  for (int k = 0; k < 20; ++k) {
    const int cols = 1 + k % 10;
    const Side side = k % 2 == 0 ? Side::Primal : Side::Dual;
    Eigen::MatrixXd b(11, cols);
    for (int i = 0; i < b.size(); ++i) b.data()[i] = n(rng);
    const LinearSubspace L(side, b);
    dc = dc && dual_complement(dual_complement(L)).same_as(L, 1e-10);
  }
  v.require(dc, "double complement");

  // alpha round trips
  bool ar = true;
  for (int k = 0; k < 20; ++k) {
    const Vec4 a = random_vec4(rng), b = random_vec4(rng);
    const Mat4 Z = alpha(a, b).Z;
    const AlphaPreimage p = alpha_inverse(Z);
    ar = ar && p.real && projective_distance(alpha(p.a, p.b), Z.cast<Complex>()) < 1e-10;
    const Vec4c c(Complex(n(rng), n(rng)), Complex(n(rng), n(rng)), Complex(n(rng), n(rng)),
                  Complex(n(rng), n(rng)));
    const Mat4 W = alpha(c, Vec4c(c.conjugate())).real();
    const AlphaPreimage q = alpha_inverse(W);
    ar = ar && !q.real && projective_distance(alpha(q.a, q.b), W.cast<Complex>()) < 1e-10;
  }
  v.require(ar, "alpha round trip");

  // real legs against type on random builds
  int builds = 0, agree = 0;
  double worst_seed = 0.0;
  for (std::uint64_t k = 0; builds < 50 && k < 80; ++k) {
    const Sym4Space s = random_space_with_E(derive_seed(80, k));
    for (int attempt = 0; attempt < 5; ++attempt) {
      try {
        const BuildResult r = build_pod(s, random_line(rng), derive_seed(81, k));
        ++builds;
        worst_seed = std::max(worst_seed, r.report.max_seed_residual_relative);
        if (r.report.real_finite_legs == 2 * (r.report.type.a - r.report.type.b)) {
          ++agree;
        }
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ResampleSeedLine) break;
      }
    }
  }
  v.require(builds == 50 && agree == 50, std::to_string(agree) + "/" + std::to_string(builds) + " builds");
  v.require(worst_seed < 1e-10, "relative seed residual " + fmt("%.3g", worst_seed));

  // type under congruence
  int same = 0;
  for (std::uint64_t k = 0; k < 20; ++k) {
    const Sym4Space s = random_space_with_E(derive_seed(82, k));
    Mat4 g;
    for (int i = 0; i < 4; ++i) g.col(i) = random_vec4(rng);
    try {
      if (compute_type(s, 1).type == compute_type(congruence(s, g), 2).type) ++same;
    } catch (const Error&) {
    }
  }
  v.require(same == 20, std::to_string(same) + "/20 congruences keep the type");
  v.detail += (v.detail.empty() ? "" : "; ") + std::to_string(agree) + "/50 builds, relative seed residual " +
              fmt("%.1e", worst_seed) + ", " +
              std::to_string(same) + "/20 congruences";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  bool skip_survey = argc > 1 && std::string(argv[1]) == "--quick";
  report(1, "worked example exactness", criterion_1);
  report(2, "worked example motion", criterion_2);
  report(3, "node count", criterion_3);
  report(4, "planted node oracle", criterion_4);
  if (skip_survey) {
    std::printf("criterion 5 survey                       SKIPPED (--quick)\n");
  } else {
    report(5, "survey at desk scale", criterion_5);
  }
  report(6, "icosapod existence", criterion_6);
  report(7, "Burmester closure", criterion_7);
  report(8, "structural properties", criterion_8);
  std::printf("%s\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
  return failures == 0 ? 0 : 1;
}
