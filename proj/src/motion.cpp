#include "icosapod/motion.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "icosapod/error.hpp"

namespace icosapod {

namespace {

using Vec6 = Eigen::Matrix<double, 6, 1>;

class Constraints {
 public:
  explicit Constraints(const Pod& pod) : legs_(pod.legs) {}

  int rows() const { return static_cast<int>(legs_.size()) + 2; }

  void evaluate(const Vec6& q, Eigen::VectorXd& F, Eigen::MatrixXd& J) const {
    const Vec3 c = q.head<3>(), u = q.tail<3>();
    const Mat3 M = 2.0 * u * u.transpose() - Mat3::Identity();
    const int m = static_cast<int>(legs_.size());
    F.resize(m + 2);
    J.setZero(m + 2, 6);
    for (int i = 0; i < m; ++i) {
      const Leg& leg = legs_[i];
      const Vec3 r = M * leg.a + 2.0 * c - leg.b;
      F(i) = r.squaredNorm() - leg.d2;
      J.block<1, 3>(i, 0) = 4.0 * r.transpose();
      J.block<1, 3>(i, 3) = (4.0 * u.dot(leg.a) * r + 4.0 * u.dot(r) * leg.a).transpose();
    }
    F(m) = u.squaredNorm() - 1.0;
    J.block<1, 3>(m, 3) = 2.0 * u.transpose();
    F(m + 1) = c.dot(u);
    J.block<1, 3>(m + 1, 0) = u.transpose();
    J.block<1, 3>(m + 1, 3) = c.transpose();
  }

  double max_leg_residual(const Eigen::VectorXd& F) const {
    double r = 0.0;
    for (std::size_t i = 0; i < legs_.size(); ++i) {
      r = std::max(r, std::abs(F(static_cast<Eigen::Index>(i))) / (1.0 + legs_[i].d2));
    }
    return r;
  }

 private:
  std::vector<Leg> legs_;
};

struct TangentInfo {
  Vec6 tangent;
  int corank = 0;
};

TangentInfo tangent_at(const Constraints& cons, const Vec6& q, double tol) {
  Eigen::VectorXd F;
  Eigen::MatrixXd J;
  cons.evaluate(q, F, J);
  if (J.rows() < 6) {
    Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(6, 6);
    padded.topRows(J.rows()) = J;
    J = padded;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  TangentInfo info;
  for (int i = 0; i < 6; ++i) info.corank += sv(i) <= tol * sv(0) ? 1 : 0;
  info.tangent = svd.matrixV().col(5);
  return info;
}

struct Correction {
  bool ok = false;
  Vec6 q;
  int iterations = 0;
};

Correction correct(const Constraints& cons, Vec6 q, const Vec6& anchor, const Vec6& tangent,
                   const TraceOptions& opt) {
  Eigen::VectorXd F;
  Eigen::MatrixXd J;
  Correction out;
  for (int k = 1; k <= opt.max_corrector_iterations; ++k) {
    cons.evaluate(q, F, J);
    Eigen::MatrixXd A(J.rows() + 1, 6);
    Eigen::VectorXd rhs(J.rows() + 1);
    A << J, tangent.transpose();
    rhs << F, tangent.dot(q - anchor);
    const Vec6 dq = A.colPivHouseholderQr().solve(rhs);
    if (!dq.allFinite()) return out;
    q -= dq;
    out.iterations = k;
    cons.evaluate(q, F, J);
    const double gauge = std::max(std::abs(F(F.size() - 2)), std::abs(F(F.size() - 1)));
    if (cons.max_leg_residual(F) <= 1e-2 * opt.tol_trace && gauge <= 1e-13 &&
        dq.norm() <= 1e-9) {
      out.ok = true;
      break;
    }
  }
  if (!out.ok) {
    const double gauge = std::max(std::abs(F(F.size() - 2)), std::abs(F(F.size() - 1)));
    out.ok = cons.max_leg_residual(F) < opt.tol_trace && gauge < 1e-12 &&
             out.iterations < opt.max_corrector_iterations;
  }
  out.q = q;
  return out;
}

MotionSample make_sample(const Pod& pod, const Vec6& q, double s, bool images) {
  MotionSample m;
  m.s = s;
  m.line = LineR3{q.head<3>(), q.tail<3>()}.canonical();
  m.sigma = line_to_halfturn(m.line);
  m.residuals = leg_residuals(pod, m.sigma);
  if (images) {
    for (const auto& leg : pod.legs) m.platform_images.push_back(apply(m.sigma, leg.a));
  }
  return m;
}

Vec6 state_of(const LineR3& line) {
  const LineR3 l = line.canonical();
  Vec6 q;
  q << l.c, l.u;
  return q;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Eigen::VectorXd leg_residuals(const Pod& pod, const StudyPoint& sigma) {
  Eigen::VectorXd r(pod.legs.size());
  for (std::size_t i = 0; i < pod.legs.size(); ++i) {
    const Leg& leg = pod.legs[i];
    r(static_cast<Eigen::Index>(i)) = sphere_residual(sigma, leg.a, leg.b, leg.d2);
  }
  return r;
}

Trajectory trace(const Pod& pod, const LineR3& start, int steps, const TraceOptions& opt) {
  const Constraints cons(pod);
  Vec6 q = state_of(start);
  Eigen::VectorXd F;
  Eigen::MatrixXd J;
  cons.evaluate(q, F, J);
  if (cons.max_leg_residual(F) > std::max(1e-8, opt.tol_trace)) {
    throw Error(ErrorCode::CorrectorDivergence,
                "start line does not satisfy the leg constraints (residual " +
                    std::to_string(cons.max_leg_residual(F)) + ")");
  }
  TangentInfo tan = tangent_at(cons, q, opt.tol_corank);
  if (tan.corank != 1) {
    throw Error(ErrorCode::RankDeficientStart,
                "constraint corank at the start is " + std::to_string(tan.corank));
  }
  Vec6 tau = opt.direction >= 0 ? tan.tangent : Vec6(-tan.tangent);

  Trajectory traj;
  traj.samples.push_back(make_sample(pod, q, 0.0, opt.record_images));
  const Vec6 q_start = q;
  Vec6 q_flip = q;
  q_flip.tail<3>() = -q.tail<3>();

  double h = opt.initial_step;
  double s = 0.0;
  int accepted = 0;
  while (accepted < steps) {
    // closing step onto the start line when it is within reach
    bool closing = false;
    Vec6 anchor = q + h * tau;
    if (accepted >= opt.closure_min_steps) {
      for (const Vec6& target : {q_start, q_flip}) {
        const double ahead = tau.dot(target - q);
        if (ahead > 0.0 && (target - q).norm() < 1.5 * h) {
          anchor = target;
          closing = true;
          break;
        }
      }
    }
    const Correction c = correct(cons, anchor, anchor, tau, opt);
    bool good = c.ok && c.iterations <= 3;
    TangentInfo next;
    if (good) {
      next = tangent_at(cons, c.q, opt.tol_corank);
      if (next.tangent.dot(tau) < 0.0) next.tangent = -next.tangent;
      // reject steps that turn sharply; they usually jump between branches
      good = next.tangent.dot(tau) > 0.9;
    }
    if (!good) {
      h *= 0.5;
      if (h < opt.min_step) {
        traj.reason = TraceStop::CorrectorDivergence;
        traj.message = "step size underflow";
        return traj;
      }
      continue;
    }
    s += (c.q - q).norm();
    q = c.q;
    tau = next.tangent;
    ++accepted;
    traj.samples.push_back(make_sample(pod, q, s, opt.record_images));
    if (next.corank != 1) {
      traj.reason = TraceStop::CorankChange;
      traj.message = "corank changed to " + std::to_string(next.corank);
      return traj;
    }
    if (closing && std::min((q - q_start).norm(), (q - q_flip).norm()) < opt.closure_tol) {
      traj.closed = true;
      if (opt.stop_at_closure) {
        traj.reason = TraceStop::Closure;
        return traj;
      }
    }
    if (c.iterations <= 2) h = std::min(2.0 * h, opt.max_step);
  }
  traj.reason = TraceStop::Steps;
  return traj;
}

std::vector<StudyPoint> sample_poses(const Trajectory& traj, int k) {
  const int n = static_cast<int>(traj.samples.size());
  if (k < 1 || k > n) {
    throw Error(ErrorCode::TooShort, "cannot take " + std::to_string(k) + " poses from " +
                                         std::to_string(n) + " samples");
  }
  const bool closed =
      traj.closed || (n > 2 && line_distance(traj.samples.front().line, traj.samples.back().line) < 1e-6);
  const double total = traj.samples.back().s;
  std::vector<StudyPoint> poses;
  int last = -1;
  for (int j = 0; j < k; ++j) {
    const double target = k == 1 ? 0.0 : (closed ? total * j / k : total * j / (k - 1));
    int best = 0;
    for (int i = 0; i < n; ++i) {
      if (std::abs(traj.samples[i].s - target) < std::abs(traj.samples[best].s - target)) best = i;
    }
    if (best <= last) best = last + 1;
    last = best;
    poses.push_back(traj.samples[best].sigma);
  }
  return poses;
}

std::string to_csv(const Trajectory& traj) {
  std::ostringstream out;
  const std::size_t points =
      traj.samples.empty() ? 0 : traj.samples.front().platform_images.size();
  out << "s,c1,c2,c3,u1,u2,u3";
  for (std::size_t i = 1; i <= points; ++i) out << ",p" << i << "_x,p" << i << "_y,p" << i << "_z";
  out << '\n';
  for (const auto& m : traj.samples) {
    out << fmt17(m.s);
    for (int i = 0; i < 3; ++i) out << ',' << fmt17(m.line.c(i));
    for (int i = 0; i < 3; ++i) out << ',' << fmt17(m.line.u(i));
    for (const auto& p : m.platform_images) {
      for (int i = 0; i < 3; ++i) out << ',' << fmt17(p(i));
    }
    out << '\n';
  }
  return out.str();
}

void export_csv(const Trajectory& traj, const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::IO, "cannot write " + path.string());
  f << to_csv(traj);
  if (!f) throw Error(ErrorCode::IO, "write failed for " + path.string());
}

Trajectory parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("s,c1,c2,c3,u1,u2,u3", 0) != 0) {
    throw Error(ErrorCode::Schema, "missing trajectory header");
  }
  const std::size_t columns = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
  if ((columns - 7) % 3 != 0) throw Error(ErrorCode::Schema, "bad column count in header");
  Trajectory traj;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> v;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t next = std::min(line.find(',', pos), line.size());
      const std::string cell = line.substr(pos, next - pos);
      char* end = nullptr;
      const double x = std::strtod(cell.c_str(), &end);
      if (cell.empty() || end != cell.c_str() + cell.size()) {
        throw Error(ErrorCode::Schema, "bad number '" + cell + "'");
      }
      v.push_back(x);
      pos = next + 1;
    }
    if (v.size() != columns) throw Error(ErrorCode::Schema, "row has wrong number of columns");
    MotionSample m;
    m.s = v[0];
    m.line.c = Vec3(v[1], v[2], v[3]);
    m.line.u = Vec3(v[4], v[5], v[6]);
    m.sigma = line_to_halfturn(m.line);
    for (std::size_t i = 7; i + 2 < v.size(); i += 3) m.platform_images.emplace_back(v[i], v[i + 1], v[i + 2]);
    traj.samples.push_back(std::move(m));
  }
  return traj;
}

Trajectory read_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::IO, "cannot read " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_csv(ss.str());
}

}  // namespace icosapod
