#pragma once

// Four-dimensional linear spaces of real symmetric 4x4 matrices.

#include <array>
#include <optional>

#include "icosapod/leg_space.hpp"
#include "icosapod/polynomial.hpp"

namespace icosapod {

/// diag(0, 1, 1, 1)
Mat4 matrix_E();

struct Sym4Space {
  std::array<Mat4, 4> basis;
  /// Coefficients c with sum c_i B_i = E, when E lies in the space.
  std::optional<Vec4> e_coefficients;

  /// Symmetrizes, checks linear independence (DegenerateBasis) and detects E.
  static Sym4Space from_basis(std::array<Mat4, 4> basis, double tol = 1e-12);

  bool contains_E() const { return e_coefficients.has_value(); }
  Mat4 matrix(const Vec4& t) const;
  Mat4c matrix(const Vec4c& t) const;
};

/// Coordinates of a symmetric matrix in R^10 (upper triangle, row-major).
Eigen::Matrix<double, 10, 1> sym_vec(const Mat4& m);

/// det(sum t_i B_i).
double symmetroid_det(const Sym4Space& space, const Vec4& t);

/// The quartic form det(sum t_i B_i) as a polynomial in t.
Polynomial symmetroid_polynomial(const Sym4Space& space);

/// g^T B_i g for every basis matrix.
Sym4Space congruence(const Sym4Space& space, const Mat4& g);

}  // namespace icosapod
