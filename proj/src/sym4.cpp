#include "icosapod/sym4.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>

#include "icosapod/error.hpp"

namespace icosapod {

Mat4 matrix_E() { return Vec4(0.0, 1.0, 1.0, 1.0).asDiagonal(); }

Eigen::Matrix<double, 10, 1> sym_vec(const Mat4& m) {
  Eigen::Matrix<double, 10, 1> v;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) v(k++) = m(i, j);
  return v;
}

Sym4Space Sym4Space::from_basis(std::array<Mat4, 4> basis, double tol) {
  Sym4Space s;
  Eigen::Matrix<double, 10, 4> cols;
  for (int i = 0; i < 4; ++i) {
    s.basis[i] = 0.5 * (basis[i] + basis[i].transpose());
    cols.col(i) = sym_vec(s.basis[i]);
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 10, 4>> svd(cols, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0 || sv(3) <= 1e-10 * sv(0)) {
    throw Error(ErrorCode::DegenerateBasis, "basis matrices are linearly dependent");
  }
  const Eigen::Matrix<double, 10, 1> e = sym_vec(matrix_E());
  const Vec4 coef = svd.solve(e);
  if ((cols * coef - e).norm() <= tol * std::max(1.0, cols.norm() * coef.norm())) {
    s.e_coefficients = coef;
  }
  return s;
}

Mat4 Sym4Space::matrix(const Vec4& t) const {
  Mat4 m = Mat4::Zero();
  for (int i = 0; i < 4; ++i) m += t(i) * basis[i];
  return m;
}

Mat4c Sym4Space::matrix(const Vec4c& t) const {
  Mat4c m = Mat4c::Zero();
  for (int i = 0; i < 4; ++i) m += t(i) * basis[i].cast<Complex>();
  return m;
}

double symmetroid_det(const Sym4Space& space, const Vec4& t) {
  return space.matrix(t).determinant();
}

Polynomial symmetroid_polynomial(const Sym4Space& space) {
  std::array<std::array<Polynomial, 4>, 4> entry;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      VecXc coeffs(4);
      for (int k = 0; k < 4; ++k) coeffs(k) = space.basis[k](i, j);
      entry[i][j] = Polynomial::linear(4, 0.0, coeffs);
    }
  }
  Polynomial det(4);
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    Polynomial term = entry[0][perm[0]] * entry[1][perm[1]] * entry[2][perm[2]] * entry[3][perm[3]];
    det += (inversions % 2 ? -1.0 : 1.0) * term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Sym4Space congruence(const Sym4Space& space, const Mat4& g) {
  std::array<Mat4, 4> b;
  for (int i = 0; i < 4; ++i) b[i] = g.transpose() * space.basis[i] * g;
  return Sym4Space::from_basis(b);
}

}  // namespace icosapod
