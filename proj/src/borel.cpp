#include "icosapod/borel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "icosapod/error.hpp"

namespace icosapod {

BuildResult build_pod(const Sym4Space& space, const LineR3& seed_line, std::uint64_t seed,
                      const NodeOptions& options) {
  BuildResult out;
  const LinearSubspace gamma = borel_from_space(space);
  const LinearSubspace U = dual_complement(pi_preimage(gamma));
  const StudyPoint sigma0 = line_to_halfturn(seed_line);
  Eigen::MatrixXd lam(11, U.basis.cols() + 1);
  lam << U.basis, s_coords(sigma0);
  out.lambda = LinearSubspace(Side::Primal, lam);
  out.gamma_tilde = dual_complement(out.lambda);

  const NodeResult nodes = solve_symmetroid_nodes(space, seed, options);
  BuildReport& rep = out.report;
  Pod& pod = out.pod;
  pod.provenance.source = "borel";
  pod.provenance.space = space;
  pod.provenance.seed_line = seed_line.canonical();
  pod.provenance.seed = seed;

  rep.node_count = static_cast<int>(nodes.nodes.size());
  for (const auto& node : nodes.nodes) {
    rep.multiplicities.push_back(node.cluster.multiplicity);
    pod.provenance.node_multiplicities.push_back(node.cluster.multiplicity);
    if (!node.cluster.real) {
      rep.complex_legs += 2;
      continue;
    }
    ++rep.type.a;
    if (*node.psd) ++rep.type.b;
    const DualLegPoint lifted = lift_into(out.gamma_tilde, *node.real_matrix);
    try {
      const LegRecovery r = leg_from_dual(lifted);
      if (r.negative_length) {
        throw Error(ErrorCode::ResampleSeedLine, "a real leg has negative squared length");
      }
      pod.legs.push_back(r.leg);
      pod.legs.push_back(r.leg.swapped());
      rep.real_finite_legs += 2;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::LegAtInfinity) {
        rep.legs_at_infinity += 2;
      } else if (e.code() == ErrorCode::ComplexLeg) {
        rep.complex_legs += 2;
      } else {
        throw;
      }
    }
  }
  pod.real_finite = rep.real_finite_legs;
  pod.at_infinity = rep.legs_at_infinity;
  pod.complex_legs = rep.complex_legs;
  for (const auto& leg : pod.legs) {
    const double r = std::abs(sphere_residual(sigma0, leg.a, leg.b, leg.d2));
    rep.max_seed_residual = std::max(rep.max_seed_residual, r);
    rep.max_seed_residual_relative =
        std::max(rep.max_seed_residual_relative,
                 r / (1.0 + leg.a.squaredNorm() + leg.b.squaredNorm() + std::abs(leg.d2)));
  }
  rep.dagger = check_dagger(pod);
  return out;
}

int max_collinear(const std::vector<Vec3>& points, double tol) {
  const int n = static_cast<int>(points.size());
  if (n <= 2) return n;
  int best = 2;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec3 d = points[j] - points[i];
      const double len = d.norm();
      if (len < tol) continue;
      int count = 0;
      for (int k = 0; k < n; ++k) {
        if ((points[k] - points[i]).cross(d).norm() / len < tol) ++count;
      }
      best = std::max(best, count);
    }
  }
  return best;
}

DaggerReport check_dagger(const Pod& pod) {
  DaggerReport r;
  const int legs = static_cast<int>(pod.legs.size());
  r.exactly_20_real_finite = legs == 20 && pod.at_infinity == 0 && pod.complex_legs == 0;
  if (!r.exactly_20_real_finite) {
    r.reasons.push_back("real finite legs: " + std::to_string(legs) + ", at infinity: " +
                        std::to_string(pod.at_infinity) + ", complex: " +
                        std::to_string(pod.complex_legs));
  }
  r.finite_leg_set = std::all_of(pod.provenance.node_multiplicities.begin(),
                                 pod.provenance.node_multiplicities.end(),
                                 [](int m) { return m == 1; });
  if (!r.finite_leg_set) r.reasons.push_back("a node has multiplicity > 1");
  std::vector<Vec3> base, platform;
  for (const auto& leg : pod.legs) {
    base.push_back(leg.b);
    platform.push_back(leg.a);
  }
  // at most half the points on one line
  const int limit = std::max(3, (legs + 1) / 2);
  r.collinear_base = legs >= 3 && max_collinear(base) >= limit;
  r.collinear_platform = legs >= 3 && max_collinear(platform) >= limit;
  if (r.collinear_base) r.reasons.push_back("base points are collinear");
  if (r.collinear_platform) r.reasons.push_back("platform points are collinear");
  return r;
}

Sym4Space random_space_with_E(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  std::array<Mat4, 4> basis;
  basis[0] = matrix_E();
  for (int k = 1; k < 4; ++k) {
    Vec10 q;
    for (int i = 0; i < 10; ++i) q(i) = n(rng);
    basis[k] = DualLegPoint::from_projected(q).Z;
  }
  return Sym4Space::from_basis(basis);
}

SurveyResult stats_survey(int samples, std::uint64_t seed, int threads,
                          const NodeOptions& options) {
  if (samples < 1) throw std::invalid_argument("stats_survey: samples must be positive");
  struct Record {
    bool degenerate = true;
    SpectraType type;
  };
  std::vector<Record> records(static_cast<std::size_t>(samples));
  auto work = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
      try {
        const Sym4Space space = random_space_with_E(s);
        records[i].type = compute_type(space, derive_seed(s, 1), options).type;
        records[i].degenerate = false;
      } catch (const Error&) {
        records[i].degenerate = true;
      }
    }
  };
  int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::clamp(nthreads, 1, samples);
  if (nthreads == 1) {
    work(0, samples);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (samples + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      const int b = t * chunk, e = std::min(samples, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  SurveyResult out;
  out.samples = samples;
  out.seed = seed;
  for (const auto& r : records) {
    if (r.degenerate) {
      ++out.degenerate;
      continue;
    }
    ++out.real_points_hist[r.type.a];
    ++out.real_preimage_hist[2 * (r.type.a - r.type.b)];
  }
  return out;
}

}  // namespace icosapod
