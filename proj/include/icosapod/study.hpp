#pragma once

// Study-style compactification of SE(3) in P^16.
//
// A point is (h : M : x : y : r) with M a 3x3 block. Real points with h != 0
// are direct isometries p -> (M p + y) / h, and then x = -M^T y / h and
// r = <y, y> / h. Half-turns about lines form the subvariety where M is
// symmetric, x = y and trace(M) + h = 0.

#include <Eigen/Core>

namespace icosapod {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kStructuralTol = 1e-10;

struct StudyPoint {
  double h = 1.0;
  Mat3 M = Mat3::Identity();
  Vec3 x = Vec3::Zero();
  Vec3 y = Vec3::Zero();
  double r = 0.0;

  /// Scaled copy: h = 1 when h is nonzero, unit max-norm otherwise.
  StudyPoint normalized() const;

  /// Coordinates (h, m11..m33 row-major, x, y, r) as a 17-vector.
  Eigen::Matrix<double, 17, 1> coords() const;
};

/// Residuals of the defining quadrics, evaluated after normalization.
/// Returns the largest absolute residual.
double compactification_residual(const StudyPoint& p);

struct LineR3 {
  Vec3 c = Vec3::Zero();       // foot point
  Vec3 u = Vec3::UnitZ();      // direction

  /// Foot point orthogonal to u, unit u with first nonzero coordinate positive.
  LineR3 canonical() const;

  /// Plücker moment c x u.
  Vec3 moment() const { return c.cross(u); }
};

/// Chordal distance between canonical representatives.
double line_distance(const LineR3& a, const LineR3& b);

struct EulerPoint {
  double e0 = 1.0, e1 = 0.0, e2 = 0.0, e3 = 0.0;
};

StudyPoint embed_isometry(const Mat3& rotation, const Vec3& translation,
                          double tol = kStructuralTol);

StudyPoint line_to_halfturn(const LineR3& line);

/// Euler coordinates of a half-turn: e0 = 0 and (e1:e2:e3) along the axis.
EulerPoint halfturn_euler(const LineR3& line);

/// Axis of a half-turn point. Inverse of line_to_halfturn up to the sign of u.
LineR3 halfturn_axis(const StudyPoint& point);

/// Dehomogenized action (M p + y) / h.
Vec3 apply(const StudyPoint& point, const Vec3& p);

/// l h + r - 2<a,x> - 2<y,b> - 2<Ma,b> with l = <a,a> + <b,b> - d2, on the
/// normalized point. For an isometry this is |sigma(a) - b|^2 - d2.
double sphere_residual(const StudyPoint& point, const Vec3& a, const Vec3& b, double d2);

bool is_involution_point(const StudyPoint& point, double tol = kStructuralTol);

}  // namespace icosapod
