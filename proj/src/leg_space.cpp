#include "icosapod/leg_space.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>

#include "icosapod/error.hpp"

namespace icosapod {

namespace {

// Off-diagonal index pairs in coordinate order s01, s02, s03, s12, s13, s23.
constexpr int kOffDiag[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

Eigen::Matrix<double, 11, 11> make_pairing() {
  Eigen::Matrix<double, 11, 11> G = Eigen::Matrix<double, 11, 11>::Zero();
  G(0, 0) = 1.0;    // h * l
  G(10, 1) = 1.0;   // r * z00
  G(1, 2) = -2.0;   // m11 * z11
  G(2, 3) = -2.0;   // m22 * z22
  G(3, 4) = -2.0;   // m33 * z33
  G(7, 5) = -2.0;   // x1 * s01
  G(8, 6) = -2.0;   // x2 * s02
  G(9, 7) = -2.0;   // x3 * s03
  G(4, 8) = -2.0;   // m12 * s12
  G(5, 9) = -2.0;   // m13 * s13
  G(6, 10) = -2.0;  // m23 * s23
  return G;
}

Vec4c normalize_projective(Vec4c v, double tol) {
  const double n = v.norm();
  for (int i = 0; i < 4; ++i) {
    if (std::abs(v(i)) > tol * n) return v / v(i);
  }
  return v;
}

bool lex_less(const Vec4c& a, const Vec4c& b) {
  for (int i = 0; i < 4; ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
  }
  for (int i = 0; i < 4; ++i) {
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

}  // namespace

Vec11 DualLegPoint::coords() const {
  Vec11 v;
  v(0) = l.value();
  v.tail<10>() = projected_coords();
  return v;
}

Vec10 DualLegPoint::projected_coords() const {
  Vec10 v;
  for (int i = 0; i < 4; ++i) v(i) = 0.5 * Z(i, i);
  for (int k = 0; k < 6; ++k) v(4 + k) = Z(kOffDiag[k][0], kOffDiag[k][1]);
  return v;
}

DualLegPoint DualLegPoint::from_coords(const Vec11& v) {
  DualLegPoint p = from_projected(v.tail<10>());
  p.l = v(0);
  return p;
}

DualLegPoint DualLegPoint::from_projected(const Vec10& v) {
  DualLegPoint p;
  for (int i = 0; i < 4; ++i) p.Z(i, i) = 2.0 * v(i);
  for (int k = 0; k < 6; ++k) {
    p.Z(kOffDiag[k][0], kOffDiag[k][1]) = v(4 + k);
    p.Z(kOffDiag[k][1], kOffDiag[k][0]) = v(4 + k);
  }
  return p;
}

DualLegPoint leg_to_dual(const Leg& leg) {
  Vec4 a, b;
  a << 1.0, leg.a;
  b << 1.0, leg.b;
  DualLegPoint p = alpha(a, b);
  p.l = leg.a.squaredNorm() + leg.b.squaredNorm() - leg.d2;
  return p;
}

DualLegPoint point_pe() {
  DualLegPoint p;
  p.l = -2.0;
  p.Z = Vec4(0.0, 2.0, 2.0, 2.0).asDiagonal();
  return p;
}

Vec11 s_coords(const StudyPoint& sigma, double tol) {
  const double scale = std::max({std::abs(sigma.h), sigma.M.cwiseAbs().maxCoeff(),
                                 sigma.x.cwiseAbs().maxCoeff(), sigma.y.cwiseAbs().maxCoeff(),
                                 std::abs(sigma.r), 1e-300});
  if ((sigma.M - sigma.M.transpose()).cwiseAbs().maxCoeff() > tol * scale ||
      (sigma.x - sigma.y).cwiseAbs().maxCoeff() > tol * scale) {
    throw Error(ErrorCode::NotOnS, "point does not satisfy M = M^T and x = y");
  }
  Vec11 v;
  v << sigma.h, sigma.M(0, 0), sigma.M(1, 1), sigma.M(2, 2), sigma.M(0, 1), sigma.M(0, 2),
      sigma.M(1, 2), sigma.x(0), sigma.x(1), sigma.x(2), sigma.r;
  return v;
}

StudyPoint from_s_coords(const Vec11& v) {
  StudyPoint p;
  p.h = v(0);
  p.M << v(1), v(4), v(5), v(4), v(2), v(6), v(5), v(6), v(3);
  p.x = v.segment<3>(7);
  p.y = p.x;
  p.r = v(10);
  return p;
}

const Eigen::Matrix<double, 11, 11>& pairing_matrix() {
  static const Eigen::Matrix<double, 11, 11> G = make_pairing();
  return G;
}

double sbsc_pair(const Vec11& primal, const Vec11& dual) {
  return primal.dot(pairing_matrix() * dual);
}

double sbsc_pair(const StudyPoint& sigma, const DualLegPoint& dual) {
  return sbsc_pair(s_coords(sigma), dual.coords());
}

DualLegPoint alpha(const Vec4& a, const Vec4& b) {
  DualLegPoint p;
  p.Z = a * b.transpose() + b * a.transpose();
  return p;
}

Mat4c alpha(const Vec4c& a, const Vec4c& b) {
  return a * b.transpose() + b * a.transpose();
}

AlphaPreimage alpha_inverse(const Mat4& Z, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat4> eig(0.5 * (Z + Z.transpose()));
  const Vec4 lam = eig.eigenvalues();
  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return std::abs(lam(i)) > std::abs(lam(j)); });
  const double top = std::abs(lam(order[0]));
  int rank = 0;
  for (int i = 0; i < 4; ++i) rank += std::abs(lam(i)) > tol * top ? 1 : 0;
  if (top == 0.0 || rank != 2) {
    throw Error(ErrorCode::RankMismatch, "expected rank 2, got " + std::to_string(rank));
  }
  const double l1 = lam(order[0]);
  const double l2 = lam(order[1]);
  const Vec4 u = eig.eigenvectors().col(order[0]);
  const Vec4 v = eig.eigenvectors().col(order[1]);
  AlphaPreimage out;
  if (l1 * l2 < 0.0) {
    const Vec4& up = l1 > 0.0 ? u : v;
    const Vec4& un = l1 > 0.0 ? v : u;
    const double lp = std::max(l1, l2);
    const double ln = std::min(l1, l2);
    const Vec4 p = std::sqrt(lp / 2.0) * up;
    const Vec4 q = std::sqrt(-ln / 2.0) * un;
    out.a = (p + q).cast<std::complex<double>>();
    out.b = (p - q).cast<std::complex<double>>();
    out.real = true;
  } else {
    const double sign = l1 > 0.0 ? 1.0 : -1.0;
    const std::complex<double> I(0.0, 1.0);
    const Vec4c p = (std::sqrt(std::abs(l1) / 2.0) * u).cast<std::complex<double>>();
    const Vec4c q = (std::sqrt(std::abs(l2) / 2.0) * v).cast<std::complex<double>>();
    out.a = sign * (p + I * q);
    out.b = p - I * q;
    out.real = false;
  }
  out.a = normalize_projective(out.a, tol);
  out.b = normalize_projective(out.b, tol);
  if (out.real) {
    out.a = out.a.real().cast<std::complex<double>>();
    out.b = out.b.real().cast<std::complex<double>>();
  }
  if (lex_less(out.b, out.a)) std::swap(out.a, out.b);
  return out;
}

LegRecovery leg_from_dual(const DualLegPoint& point, double tol) {
  if (!point.l) throw Error(ErrorCode::Schema, "leg_from_dual needs the l coordinate");
  const double zn = point.Z.cwiseAbs().maxCoeff();
  if (std::abs(point.Z(0, 0)) < tol * zn) {
    throw Error(ErrorCode::LegAtInfinity, "z00 vanishes");
  }
  const AlphaPreimage pre = alpha_inverse(point.Z, tol);
  if (!pre.real) throw Error(ErrorCode::ComplexLeg, "preimage is a complex conjugate pair");
  // alpha(a, b) with a0 = b0 = 1 has Z00 = 2.
  const double kappa = 2.0 / point.Z(0, 0);
  LegRecovery out;
  out.leg.a = pre.a.real().tail<3>();
  out.leg.b = pre.b.real().tail<3>();
  out.leg.d2 = out.leg.a.squaredNorm() + out.leg.b.squaredNorm() - kappa * *point.l;
  out.negative_length = out.leg.d2 < -tol * (1.0 + std::abs(kappa * *point.l));
  return out;
}

LinearSubspace::LinearSubspace(Side s, Eigen::MatrixXd b, double tol) : side(s) {
  const int n = ambient();
  if (b.rows() != n) {
    throw Error(ErrorCode::DegenerateBasis,
                "basis has " + std::to_string(b.rows()) + " rows, expected " + std::to_string(n));
  }
  if (b.cols() == 0) {
    basis = Eigen::MatrixXd(n, 0);
    return;
  }
  if (b.cols() > n) throw Error(ErrorCode::DegenerateBasis, "too many basis vectors");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(b);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(sv.size() - 1) <= tol * sv(0)) {
    throw Error(ErrorCode::DegenerateBasis, "basis is not of full rank");
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(b);
  basis = qr.householderQ() * Eigen::MatrixXd::Identity(n, b.cols());
}

bool LinearSubspace::contains(const Eigen::VectorXd& v, double tol) const {
  const double n = v.norm();
  if (n == 0.0) return true;
  if (basis.cols() == 0) return false;
  return (v - basis * (basis.transpose() * v)).norm() <= tol * n;
}

bool LinearSubspace::same_as(const LinearSubspace& other, double tol) const {
  if (side != other.side || basis.cols() != other.basis.cols()) return false;
  for (Eigen::Index j = 0; j < other.basis.cols(); ++j) {
    if (!contains(other.basis.col(j), tol)) return false;
  }
  return true;
}

LinearSubspace dual_complement(const LinearSubspace& V, double tol) {
  if (V.side == Side::Projected) {
    throw Error(ErrorCode::DegenerateBasis, "the projected side has no pairing");
  }
  const auto& G = pairing_matrix();
  const Side other = V.side == Side::Primal ? Side::Dual : Side::Primal;
  const int k = static_cast<int>(V.basis.cols());
  if (k == 0) return LinearSubspace(other, Eigen::MatrixXd::Identity(11, 11), tol);
  Eigen::MatrixXd rows = V.side == Side::Primal ? Eigen::MatrixXd(V.basis.transpose() * G)
                                                : Eigen::MatrixXd(V.basis.transpose() * G.transpose());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= tol * sv(0)) {
    throw Error(ErrorCode::DegenerateBasis, "subspace basis is not of full rank");
  }
  return LinearSubspace(other, svd.matrixV().rightCols(11 - k), tol);
}

Mat4 pi_project(const DualLegPoint& point) { return point.Z; }

LinearSubspace pi_preimage(const LinearSubspace& gamma) {
  if (gamma.side != Side::Projected) {
    throw Error(ErrorCode::DegenerateBasis, "pi_preimage expects a projected subspace");
  }
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(11, gamma.basis.cols() + 1);
  b(0, 0) = 1.0;
  b.bottomRightCorner(10, gamma.basis.cols()) = gamma.basis;
  return LinearSubspace(Side::Dual, b);
}

DualLegPoint lift_into(const LinearSubspace& gamma_tilde, const Mat4& Z, double tol) {
  if (gamma_tilde.side != Side::Dual) {
    throw Error(ErrorCode::DegenerateBasis, "lift_into expects a dual-side subspace");
  }
  const Eigen::MatrixXd P = gamma_tilde.basis.bottomRows(10);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(P, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(sv.size() - 1) <= tol * sv(0)) {
    throw Error(ErrorCode::NonUniqueLift, "projection restricted to the subspace drops rank");
  }
  DualLegPoint target;
  target.Z = Z;
  const Vec10 zc = target.projected_coords();
  const Eigen::VectorXd coef = svd.solve(zc);
  const Vec10 back = P * coef;
  if ((back - zc).norm() > 1e3 * tol * zc.norm()) {
    throw Error(ErrorCode::DegenerateBasis, "matrix is not in the projection of the subspace");
  }
  DualLegPoint out;
  out.Z = Z;
  out.l = gamma_tilde.basis.row(0).dot(coef);
  return out;
}

}  // namespace icosapod
