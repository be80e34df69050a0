#include "icosapod/study.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "icosapod/error.hpp"

namespace icosapod {

StudyPoint StudyPoint::normalized() const {
  double scale = 1.0;
  if (h != 0.0) {
    scale = 1.0 / h;
  } else {
    double mx = std::max({M.cwiseAbs().maxCoeff(), x.cwiseAbs().maxCoeff(),
                          y.cwiseAbs().maxCoeff(), std::abs(r)});
    if (mx > 0.0) scale = 1.0 / mx;
  }
  StudyPoint out;
  out.h = h * scale;
  out.M = M * scale;
  out.x = x * scale;
  out.y = y * scale;
  out.r = r * scale;
  if (h != 0.0) out.h = 1.0;
  return out;
}

Eigen::Matrix<double, 17, 1> StudyPoint::coords() const {
  Eigen::Matrix<double, 17, 1> v;
  v(0) = h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v(1 + 3 * i + j) = M(i, j);
  v.segment<3>(10) = x;
  v.segment<3>(13) = y;
  v(16) = r;
  return v;
}

double compactification_residual(const StudyPoint& p) {
  const StudyPoint q = p.normalized();
  const Mat3 id = Mat3::Identity();
  double res = 0.0;
  res = std::max(res, (q.M * q.M.transpose() - q.h * q.h * id).cwiseAbs().maxCoeff());
  res = std::max(res, (q.M.transpose() * q.M - q.h * q.h * id).cwiseAbs().maxCoeff());
  res = std::max(res, std::abs(q.M.determinant() - q.h * q.h * q.h));
  res = std::max(res, (q.M.transpose() * q.y + q.h * q.x).cwiseAbs().maxCoeff());
  res = std::max(res, (q.M * q.x + q.h * q.y).cwiseAbs().maxCoeff());
  res = std::max(res, std::abs(q.x.squaredNorm() - q.r * q.h));
  res = std::max(res, std::abs(q.y.squaredNorm() - q.r * q.h));
  return res;
}

LineR3 LineR3::canonical() const {
  LineR3 out;
  const double uu = u.squaredNorm();
  out.c = c - (c.dot(u) / uu) * u;
  out.u = u / std::sqrt(uu);
  for (int i = 0; i < 3; ++i) {
    if (out.u(i) != 0.0) {
      if (out.u(i) < 0.0) out.u = -out.u;
      break;
    }
  }
  return out;
}

double line_distance(const LineR3& a, const LineR3& b) {
  const LineR3 ca = a.canonical();
  const LineR3 cb = b.canonical();
  return std::sqrt((ca.c - cb.c).squaredNorm() + (ca.u - cb.u).squaredNorm());
}

StudyPoint embed_isometry(const Mat3& rotation, const Vec3& translation, double tol) {
  const double orth = (rotation.transpose() * rotation - Mat3::Identity()).cwiseAbs().maxCoeff();
  const double det = rotation.determinant();
  if (orth > tol || std::abs(det - 1.0) > tol) {
    throw Error(ErrorCode::NonOrthogonalInput,
                "rotation fails orthogonality (residual " + std::to_string(orth) +
                    ", det " + std::to_string(det) + ")");
  }
  StudyPoint p;
  p.h = 1.0;
  p.M = rotation;
  p.y = translation;
  p.x = -rotation.transpose() * translation;
  p.r = translation.squaredNorm();
  return p;
}

StudyPoint line_to_halfturn(const LineR3& line) {
  const LineR3 l = line.canonical();
  StudyPoint p;
  p.h = 1.0;
  p.M = 2.0 * l.u * l.u.transpose() - Mat3::Identity();
  p.y = 2.0 * l.c;
  p.x = p.y;
  p.r = 4.0 * l.c.squaredNorm();
  return p;
}

EulerPoint halfturn_euler(const LineR3& line) {
  const LineR3 l = line.canonical();
  return {0.0, l.u(0), l.u(1), l.u(2)};
}

LineR3 halfturn_axis(const StudyPoint& point) {
  const StudyPoint q = point.normalized();
  if (q.h == 0.0) throw Error(ErrorCode::BoundaryPoint, "half-turn axis of a boundary point");
  // M + I = 2 u u^T
  const Mat3 uu = 0.5 * (q.M + Mat3::Identity());
  Eigen::Index k = 0;
  uu.diagonal().maxCoeff(&k);
  LineR3 line;
  line.u = uu.col(k) / std::sqrt(uu(k, k));
  line.c = 0.5 * q.y;
  return line.canonical();
}

Vec3 apply(const StudyPoint& point, const Vec3& p) {
  if (point.h == 0.0) throw Error(ErrorCode::BoundaryPoint, "cannot apply a boundary point");
  return (point.M * p + point.y) / point.h;
}

double sphere_residual(const StudyPoint& point, const Vec3& a, const Vec3& b, double d2) {
  const StudyPoint q = point.normalized();
  const double l = a.squaredNorm() + b.squaredNorm() - d2;
  return l * q.h + q.r - 2.0 * a.dot(q.x) - 2.0 * q.y.dot(b) - 2.0 * (q.M * a).dot(b);
}

bool is_involution_point(const StudyPoint& point, double tol) {
  const StudyPoint q = point.normalized();
  return (q.M - q.M.transpose()).norm() < tol && (q.x - q.y).norm() < tol &&
         std::abs(q.M.trace() + q.h) < tol;
}

}  // namespace icosapod
