#include "icosapod/homotopy.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "icosapod/error.hpp"

namespace icosapod {

namespace {

// Straight-line homotopy (1 - t) gamma G + t F on the chart c . X = 1.
class Homotopy {
 public:
  Homotopy(const PolySystem& target, Complex gamma, VecXc chart)
      : degrees_(target.degrees()), gamma_(gamma), chart_(std::move(chart)),
        target_(homogenized(target)) {}

  int size() const { return static_cast<int>(degrees_.size()) + 1; }
  const VecXc& chart() const { return chart_; }
  const std::vector<int>& degrees() const { return degrees_; }

  void evaluate(const VecXc& X, double t, VecXc& H, MatXc& J, VecXc& Ht) const {
    const int n = static_cast<int>(degrees_.size());
    VecXc F;
    MatXc dF;
    target_.evaluate(X, F, dF);
    H.resize(n + 1);
    Ht.resize(n + 1);
    J.setZero(n + 1, n + 1);
    for (int i = 0; i < n; ++i) {
      const int d = degrees_[i];
      const Complex xi = X(i + 1);
      const Complex x0 = X(0);
      const Complex g = std::pow(xi, d) - std::pow(x0, d);
      H(i) = (1.0 - t) * gamma_ * g + t * F(i);
      Ht(i) = F(i) - gamma_ * g;
      J.row(i) = t * dF.row(i);
      J(i, i + 1) += (1.0 - t) * gamma_ * static_cast<double>(d) * std::pow(xi, d - 1);
      J(i, 0) -= (1.0 - t) * gamma_ * static_cast<double>(d) * std::pow(x0, d - 1);
    }
    H(n) = chart_.dot(X) - 1.0;  // Eigen's dot conjugates the left operand
    Ht(n) = 0.0;
    J.row(n) = chart_.conjugate().transpose();
  }

  bool velocity(const VecXc& X, double t, VecXc& v) const {
    VecXc H, Ht;
    MatXc J;
    evaluate(X, t, H, J, Ht);
    Eigen::PartialPivLU<MatXc> lu(J);
    v = -lu.solve(Ht);
    return v.allFinite();
  }

 private:
  static CompiledSystem homogenized(const PolySystem& target) {
    PolySystem h;
    h.nvars = target.nvars + 1;
    for (const auto& p : target.polys) h.polys.push_back(p.homogenize());
    return CompiledSystem(h);
  }

  std::vector<int> degrees_;
  Complex gamma_;
  VecXc chart_;
  CompiledSystem target_;
};

struct CorrectorResult {
  bool converged = false;
  VecXc X;
};

CorrectorResult correct(const Homotopy& hom, VecXc X, double t, double tol, int max_iter) {
  VecXc H, Ht;
  MatXc J;
  for (int k = 0; k < max_iter; ++k) {
    hom.evaluate(X, t, H, J, Ht);
    Eigen::PartialPivLU<MatXc> lu(J);
    const VecXc dx = lu.solve(H);
    if (!dx.allFinite()) return {false, X};
    if (k == 0 && dx.norm() > 0.05 * (1.0 + X.norm())) return {false, X};
    X -= dx;
    if (dx.norm() <= tol * (1.0 + X.norm())) return {true, X};
  }
  return {false, X};
}

PathReport track_path(const Homotopy& hom, VecXc X, const TrackOptions& opt) {
  PathReport rep;
  double t = 0.0;
  double dt = opt.initial_step;
  int successes = 0;
  VecXc k1, k2, k3, k4;
  while (t < 1.0) {
    if (rep.steps >= opt.max_steps || dt < opt.min_step) break;
    ++rep.steps;
    const double step = std::min(dt, 1.0 - t);
    const double t1 = (t + step >= 1.0 - 1e-15) ? 1.0 : t + step;
    bool ok = hom.velocity(X, t, k1) && hom.velocity(X + 0.5 * step * k1, t + 0.5 * step, k2) &&
              hom.velocity(X + 0.5 * step * k2, t + 0.5 * step, k3) &&
              hom.velocity(X + step * k3, t1, k4);
    CorrectorResult c;
    if (ok) {
      const VecXc predicted = X + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      c = correct(hom, predicted, t1, opt.tol_track, 3);
    }
    if (ok && c.converged) {
      X = c.X;
      t = t1;
      if (++successes >= 2) {
        dt = std::min(2.0 * dt, opt.max_step);
        successes = 0;
      }
    } else {
      dt *= 0.5;
      successes = 0;
    }
    const double x0 = std::abs(X(0)) / X.norm();
    if (t > 0.9 && x0 < 1e-12) break;
  }
  rep.t = t;
  rep.endpoint = X;
  const double x0 = std::abs(X(0)) / X.norm();
  if (t >= 1.0) {
    rep.status = x0 < 1e-10 ? PathStatus::AtInfinity : PathStatus::Finite;
  } else if (x0 < opt.tol_infinity) {
    rep.status = PathStatus::AtInfinity;
  } else {
    rep.status = PathStatus::Finite;  // stalled; confirmed or rejected by refinement
  }
  return rep;
}

double condition_number(const CompiledSystem& sys, const VecXc& x) {
  VecXc F;
  MatXc J;
  sys.evaluate(x, F, J);
  const Eigen::VectorXd mags = sys.magnitudes(x);
  for (int i = 0; i < J.rows(); ++i) {
    if (mags(i) > 0.0) J.row(i) /= mags(i);
  }
  // scale columns by (1 + |x|) so the estimate is unit-free
  J *= (1.0 + x.norm());
  Eigen::JacobiSVD<MatXc> svd(J);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / sv(sv.size() - 1);
}

bool lex_less(const VecXc& a, const VecXc& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

struct Attempt {
  TrackResult result;
  int jumps = 0;
};

Attempt run_attempt(const PolySystem& system, std::uint64_t seed, const TrackOptions& opt) {
  const int n = system.nvars;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Complex gamma = std::polar(1.0, angle(rng));
  VecXc chart(n + 1);
  for (int i = 0; i <= n; ++i) chart(i) = Complex(normal(rng), normal(rng));
  const Homotopy hom(system, gamma, chart);
  const CompiledSystem affine(system);
  const auto degrees = system.degrees();

  long total = 1;
  for (int d : degrees) total *= d;

  Attempt att;
  TrackResult& res = att.result;
  res.seed = seed;
  struct Candidate {
    VecXc x;
    double residual;
    double condition;
  };
  std::vector<Candidate> finite;

  for (long idx = 0; idx < total; ++idx) {
    VecXc X(n + 1);
    X(0) = 1.0;
    long rem = idx;
    for (int i = 0; i < n; ++i) {
      const int d = degrees[i];
      X(i + 1) = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(rem % d) / d);
      rem /= d;
    }
    X /= chart.dot(X);
    PathReport rep = track_path(hom, X, opt);
    if (rep.status == PathStatus::Finite) {
      VecXc x = rep.endpoint.tail(n) / rep.endpoint(0);
      const double r = refine(affine, x);
      if (x.allFinite() && r < opt.tol_residual) {
        finite.push_back({x, r, condition_number(affine, x)});
      } else {
        rep.status = PathStatus::Failed;
      }
    }
    if (rep.status == PathStatus::AtInfinity) ++res.at_infinity;
    if (rep.status == PathStatus::Failed) ++res.failures;
    res.paths.push_back(std::move(rep));
  }

  // cluster endpoints
  std::sort(finite.begin(), finite.end(),
            [](const Candidate& a, const Candidate& b) { return lex_less(a.x, b.x); });
  std::vector<bool> used(finite.size(), false);
  for (std::size_t i = 0; i < finite.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::size_t best = i;
    int mult = 1;
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      if (used[j]) continue;
      const double scale = 1.0 + std::max(finite[i].x.norm(), finite[j].x.norm());
      if ((finite[i].x - finite[j].x).norm() <= opt.tol_cluster * scale) {
        used[j] = true;
        ++mult;
        if (finite[j].residual < finite[best].residual) best = j;
      }
    }
    SolutionCluster c;
    c.point = finite[best].x;
    c.multiplicity = mult;
    c.residual = finite[best].residual;
    c.condition = finite[best].condition;
    if (mult > 1 && c.condition < 1e6) ++att.jumps;
    const double scale = std::max(1.0, c.point.cwiseAbs().maxCoeff());
    c.real = c.point.imag().cwiseAbs().maxCoeff() <= opt.tol_real * scale;
    if (c.real) {
      VecXc xr = c.point.real().cast<Complex>();
      const double r = refine(affine, xr);
      c.point = xr.real().cast<Complex>();
      c.residual = std::min(r, relative_residual(affine, c.point));
    }
    res.clusters.push_back(std::move(c));
  }

  std::sort(res.clusters.begin(), res.clusters.end(),
            [](const SolutionCluster& a, const SolutionCluster& b) {
              if (a.real != b.real) return a.real;
              return lex_less(a.point, b.point);
            });
  for (std::size_t i = 0; i < res.clusters.size(); ++i) {
    auto& ci = res.clusters[i];
    if (ci.real || ci.conjugate) continue;
    for (std::size_t j = i + 1; j < res.clusters.size(); ++j) {
      auto& cj = res.clusters[j];
      if (cj.real || cj.conjugate) continue;
      const double scale = 1.0 + ci.point.norm();
      if ((ci.point.conjugate() - cj.point).norm() <= 10.0 * opt.tol_cluster * scale) {
        ci.conjugate = j;
        cj.conjugate = i;
        break;
      }
    }
  }
  return att;
}

}  // namespace

int TrackResult::multiplicity_sum() const {
  int s = 0;
  for (const auto& c : clusters) s += c.multiplicity;
  return s;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 over the combined input
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double relative_residual(const CompiledSystem& system, const VecXc& x) {
  VecXc F;
  system.evaluate(x, F);
  const Eigen::VectorXd mags = system.scales(x);
  double r = 0.0;
  for (int i = 0; i < F.size(); ++i) {
    const double m = mags(i) > 0.0 ? mags(i) : 1.0;
    r = std::max(r, std::abs(F(i)) / m);
  }
  return r;
}

double refine(const CompiledSystem& system, VecXc& x, int max_iterations) {
  VecXc F;
  MatXc J;
  VecXc best = x;
  double best_res = relative_residual(system, x);
  for (int k = 0; k < max_iterations; ++k) {
    system.evaluate(x, F, J);
    const VecXc dx = J.colPivHouseholderQr().solve(F);
    if (!dx.allFinite()) break;
    x -= dx;
    const double r = relative_residual(system, x);
    if (r < best_res) {
      best_res = r;
      best = x;
    }
    if (dx.norm() <= 1e-15 * (1.0 + x.norm())) break;
  }
  x = best;
  return best_res;
}

TrackResult track_total_degree(const PolySystem& system, std::uint64_t seed,
                               const TrackOptions& options) {
  if (!system.square()) throw std::invalid_argument("track_total_degree: system is not square");
  for (int d : system.degrees()) {
    if (d <= 0) throw std::invalid_argument("track_total_degree: constant equation");
  }
  Attempt att;
  for (int k = 0; k < std::max(1, options.max_attempts); ++k) {
    att = run_attempt(system, k == 0 ? seed : derive_seed(seed, 1000 + k), options);
    att.result.attempts = k + 1;
    const double frac = static_cast<double>(att.result.failures) /
                        static_cast<double>(att.result.paths.size());
    if (frac <= options.max_failure_fraction && att.jumps == 0) break;
  }
  TrackResult result = std::move(att.result);

  if (options.check_positive_dimensional) {
    std::vector<VecXc> singular;
    for (const auto& c : result.clusters) {
      if (c.condition > options.singular_condition) singular.push_back(c.point);
    }
    if (!singular.empty()) {
      TrackOptions second = options;
      second.check_positive_dimensional = false;
      second.max_attempts = 1;
      const Attempt other = run_attempt(system, derive_seed(seed, 7777), second);
      for (const auto& p : singular) {
        bool matched = false;
        for (const auto& c : other.result.clusters) {
          if ((c.point - p).norm() <= 1e-4 * (1.0 + p.norm())) {
            matched = true;
            break;
          }
        }
        if (!matched) {
          throw Error(ErrorCode::PositiveDimensional,
                      "singular endpoints differ between independent homotopies");
        }
      }
    }
  }
  return result;
}

}  // namespace icosapod
