#include "icosapod/burmester.hpp"

#include <Eigen/Dense>

#include "icosapod/error.hpp"

namespace icosapod {

namespace {

Polynomial var(int i) { return Polynomial::variable(6, i); }

void check_span(const std::vector<StudyPoint>& poses) {
  Eigen::MatrixXd P(17, poses.size());
  for (std::size_t k = 0; k < poses.size(); ++k) {
    const auto c = poses[k].normalized().coords();
    P.col(static_cast<Eigen::Index>(k)) = c / c.norm();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(P);
  const auto& sv = svd.singularValues();
  const int rank = static_cast<int>((sv.array() > 1e-9 * sv(0)).count());
  if (rank < 7) {
    throw Error(ErrorCode::DegeneratePoses,
                "poses span a P^" + std::to_string(rank - 1) + ", need P^6");
  }
}

}  // namespace

PolySystem burmester_system(const std::vector<StudyPoint>& poses) {
  if (poses.size() != 7) throw Error(ErrorCode::DegeneratePoses, "need exactly 7 poses");
  std::vector<Mat3> R;
  std::vector<Vec3> t;
  for (const auto& p : poses) {
    if (std::abs(p.h) < kStructuralTol) throw Error(ErrorCode::BoundaryPoint, "pose with h = 0");
    R.push_back(p.M / p.h);
    t.push_back(p.y / p.h);
  }
  PolySystem sys;
  sys.nvars = 6;
  for (int k = 1; k < 7; ++k) {
    const Mat3 D = R[k] - R[0];
    const Vec3 g = 2.0 * (R[k].transpose() * t[k] - R[0].transpose() * t[0]);
    const Vec3 e = t[k] - t[0];
    Polynomial f = Polynomial::constant(6, t[k].squaredNorm() - t[0].squaredNorm());
    for (int i = 0; i < 3; ++i) {
      f += g(i) * var(i);
      f -= 2.0 * e(i) * var(3 + i);
      for (int j = 0; j < 3; ++j) {
        if (D(i, j) != 0.0) f -= 2.0 * D(i, j) * (var(3 + i) * var(j));
      }
    }
    sys.polys.push_back(f);
  }
  return sys;
}

BurmesterResult solve_burmester(const std::vector<StudyPoint>& poses, std::uint64_t seed,
                                const TrackOptions& options) {
  PolySystem sys = burmester_system(poses);
  check_span(poses);
  const Mat3 R1 = poses[0].M / poses[0].h;
  const Vec3 t1 = poses[0].y / poses[0].h;

  BurmesterResult out;
  out.track = track_total_degree(sys, seed, options);
  for (const auto& cl : out.track.clusters) {
    BurmesterSolution s;
    s.a = cl.point.head<3>();
    s.b = cl.point.tail<3>();
    const Vec3c r = R1.cast<Complex>() * s.a + t1.cast<Complex>() - s.b;
    s.d2 = r.transpose() * r;
    s.real = cl.real;
    s.cluster = cl;
    out.multiplicity_sum += cl.multiplicity;
    if (cl.real) out.real_count += cl.multiplicity;
    out.solutions.push_back(std::move(s));
  }
  return out;
}

}  // namespace icosapod
