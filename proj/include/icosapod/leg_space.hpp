#pragma once

// Leg space for half-turn motions.
//
// Primal side: the 11 coordinates of the linear space S = {M = M^T, x = y},
//   ordered (h, m11, m22, m33, m12, m13, m23, x1, x2, x3, r).
// Dual side: (l, z00, z11, z22, z33, s01, s02, s03, s12, s13, s23). A dual
//   point is also written (l, Z) with Z the symmetric matrix
//   Z00 = 2 z00, Zii = 2 zii, Zij = sij.
// Projected side: the dual coordinates with l removed.
//
// The pairing is l h + 1/2 <Z, Q(sigma)>_F with Q00 = r, Q0i = -2 x_i and
// Qij = -2 m_ij, which is the general bilinear sphere condition restricted to S.

#include <Eigen/Core>
#include <complex>
#include <optional>
#include <utility>

#include "icosapod/study.hpp"

namespace icosapod {

using Complex = std::complex<double>;
using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;
using Mat4c = Eigen::Matrix4cd;
using Vec4c = Eigen::Vector4cd;
using Vec10 = Eigen::Matrix<double, 10, 1>;
using Vec11 = Eigen::Matrix<double, 11, 1>;

inline constexpr double kRankTol = 1e-8;

struct DualLegPoint {
  std::optional<double> l;
  Mat4 Z = Mat4::Zero();

  /// Dual coordinates; requires l.
  Vec11 coords() const;
  /// Projected coordinates (z00, z11, z22, z33, s01, ..., s23).
  Vec10 projected_coords() const;

  static DualLegPoint from_coords(const Vec11& v);
  static DualLegPoint from_projected(const Vec10& v);
};

struct Leg {
  Vec3 a = Vec3::Zero();  // platform point
  Vec3 b = Vec3::Zero();  // base point
  double d2 = 0.0;        // squared leg length

  Leg swapped() const { return {b, a, d2}; }
};

/// Dual point (l, alpha((1,a),(1,b))) with l = <a,a> + <b,b> - d2.
DualLegPoint leg_to_dual(const Leg& leg);

/// The point p_e = (l = -2, z11 = z22 = z33 = 1), dual to h + trace(M) = 0.
DualLegPoint point_pe();

/// Primal S-coordinates of a point with M = M^T and x = y.
Vec11 s_coords(const StudyPoint& sigma, double tol = kStructuralTol);
StudyPoint from_s_coords(const Vec11& v);

/// Pairing matrix G with pair(v, w) = v^T G w.
const Eigen::Matrix<double, 11, 11>& pairing_matrix();

double sbsc_pair(const StudyPoint& sigma, const DualLegPoint& dual);
double sbsc_pair(const Vec11& primal, const Vec11& dual);

/// Z = a b^T + b a^T (the l coordinate is left unset).
DualLegPoint alpha(const Vec4& a, const Vec4& b);
Mat4c alpha(const Vec4c& a, const Vec4c& b);

struct AlphaPreimage {
  Vec4c a;
  Vec4c b;
  bool real = false;
};

/// Factor a rank-2 symmetric matrix as a b^T + b a^T. The pair is real iff the
/// nonzero eigenvalues have opposite signs.
AlphaPreimage alpha_inverse(const Mat4& Z, double tol = kRankTol);

struct LegRecovery {
  Leg leg;
  bool negative_length = false;
};

/// Leg (a, b, d2) of a dual point on the cone, with a0 = b0 = 1.
LegRecovery leg_from_dual(const DualLegPoint& point, double tol = kRankTol);

enum class Side { Primal, Dual, Projected };

struct LinearSubspace {
  Side side = Side::Primal;
  Eigen::MatrixXd basis;  // coordinate vectors as columns

  LinearSubspace() = default;
  /// Validates full column rank; throws DegenerateBasis otherwise.
  LinearSubspace(Side side, Eigen::MatrixXd basis, double tol = kRankTol);

  int ambient() const { return side == Side::Projected ? 10 : 11; }
  /// Projective dimension; -1 for the empty subspace.
  int dim() const { return static_cast<int>(basis.cols()) - 1; }

  bool contains(const Eigen::VectorXd& v, double tol = 1e-10) const;
  bool same_as(const LinearSubspace& other, double tol = 1e-10) const;
};

/// Annihilator under the pairing, on the opposite side.
LinearSubspace dual_complement(const LinearSubspace& V, double tol = kRankTol);

/// Drops l.
Mat4 pi_project(const DualLegPoint& point);

/// pi^{-1}(Gamma) on the dual side: Gamma plus the vertex (1, 0, ..., 0).
LinearSubspace pi_preimage(const LinearSubspace& gamma);

/// The unique point of gamma_tilde whose projection is proportional to Z,
/// scaled so that its Z part equals the given matrix.
DualLegPoint lift_into(const LinearSubspace& gamma_tilde, const Mat4& Z, double tol = kRankTol);

}  // namespace icosapod
