#include "icosapod/spectrahedra.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "icosapod/error.hpp"

namespace icosapod {

TypeResult compute_type(const Sym4Space& space, std::uint64_t seed, const NodeOptions& options) {
  TypeResult out;
  out.nodes = solve_symmetroid_nodes(space, seed, options);
  if (out.nodes.multiplicity_sum != 10 || out.nodes.nodes.size() != 10) {
    throw Error(ErrorCode::DegenerateSpace,
                "expected 10 simple nodes, found " + std::to_string(out.nodes.nodes.size()) +
                    " with multiplicity sum " + std::to_string(out.nodes.multiplicity_sum));
  }
  for (const auto& node : out.nodes.nodes) {
    if (node.near_degenerate) {
      throw Error(ErrorCode::DegenerateSpace, "a node is not an ordinary double point");
    }
    if (!node.cluster.real) continue;
    ++out.type.a;
    if (*node.psd) ++out.type.b;
  }
  return out;
}

Mat4 congruence_to_E(const Mat4& P, double tol) {
  Eigen::SelfAdjointEigenSolver<Mat4> eig(0.5 * (P + P.transpose()));
  const Vec4 lam = eig.eigenvalues();  // ascending
  const double top = lam.cwiseAbs().maxCoeff();
  if (top == 0.0 || std::abs(lam(0)) > tol * top || lam(1) <= tol * top) {
    throw Error(ErrorCode::NoBoundaryRank3Point,
                "matrix is not positive semidefinite of rank 3");
  }
  Mat4 g;
  g.col(0) = eig.eigenvectors().col(0);
  for (int i = 1; i < 4; ++i) g.col(i) = eig.eigenvectors().col(i) / std::sqrt(lam(i));
  return g;
}

namespace {

// Largest lambda_min(M(t)) over the unit sphere, by projected supergradient ascent.
Vec4 most_interior(const Sym4Space& space, std::mt19937_64& rng, const AdaptOptions& opt,
                   double& best_value) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec4 best = Vec4::Zero();
  best_value = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < opt.starts; ++s) {
    Vec4 t(n(rng), n(rng), n(rng), n(rng));
    t.normalize();
    for (int k = 0; k < opt.ascent_iterations; ++k) {
      Eigen::SelfAdjointEigenSolver<Mat4> eig(space.matrix(t));
      const double value = eig.eigenvalues()(0);
      if (value > best_value) {
        best_value = value;
        best = t;
      }
      const Vec4 v = eig.eigenvectors().col(0);
      Vec4 grad;
      for (int i = 0; i < 4; ++i) grad(i) = v.dot(space.basis[i] * v);
      grad -= grad.dot(t) * t;
      t += (0.5 / (1.0 + 0.05 * k)) * grad;
      t.normalize();
    }
    if (best_value > 0.0 && s >= 4) break;
  }
  return best;
}

}  // namespace

Sym4Space adapt_contain_E(const Sym4Space& space, std::uint64_t seed, const AdaptOptions& opt) {
  if (space.contains_E()) return space;
  std::mt19937_64 rng(seed);
  double depth = 0.0;
  const Vec4 interior = most_interior(space, rng, opt, depth);
  if (!(depth > 0.0)) {
    throw Error(ErrorCode::NoBoundaryRank3Point, "the spectrahedron has empty interior");
  }
  const Mat4 inner = space.matrix(interior);
  const Eigen::LLT<Mat4> llt(inner);
  const Mat4 Linv = llt.matrixL().solve(Mat4::Identity());
  std::normal_distribution<double> n(0.0, 1.0);
  for (int attempt = 0; attempt < opt.ray_attempts; ++attempt) {
    const Vec4 dir(n(rng), n(rng), n(rng), n(rng));
    const Mat4 K = Linv * space.matrix(dir) * Linv.transpose();
    Eigen::SelfAdjointEigenSolver<Mat4> eig(0.5 * (K + K.transpose()));
    const double mu = eig.eigenvalues()(0);
    if (mu >= 0.0) continue;  // the ray never leaves the spectrahedron
    const Vec4 t = interior - dir / mu;
    const Mat4 P = space.matrix(t);
    Mat4 g;
    try {
      g = congruence_to_E(P);
    } catch (const Error&) {
      continue;
    }
    Sym4Space moved = congruence(space, g);
    // rebasis with E first, dropping the basis matrix E depends on most
    Vec4 w = t;
    Eigen::Index drop = 0;
    w.cwiseAbs().maxCoeff(&drop);
    std::array<Mat4, 4> basis;
    basis[0] = matrix_E();
    int k = 1;
    for (int i = 0; i < 4; ++i) {
      if (i != drop) basis[k++] = moved.basis[i];
    }
    Sym4Space out = Sym4Space::from_basis(basis, 1e-9);
    if (out.contains_E()) return out;
  }
  throw Error(ErrorCode::NoBoundaryRank3Point, "no rank-3 boundary point found");
}

LinearSubspace borel_from_space(const Sym4Space& space) {
  if (!space.contains_E()) throw Error(ErrorCode::MissingE, "space does not contain E");
  Eigen::MatrixXd b(10, 4);
  for (int i = 0; i < 4; ++i) {
    DualLegPoint p;
    p.Z = space.basis[i];
    b.col(i) = p.projected_coords();
  }
  return LinearSubspace(Side::Projected, b);
}

Sym4Space space_from_borel(const LinearSubspace& gamma) {
  if (gamma.side != Side::Projected || gamma.basis.cols() != 4) {
    throw Error(ErrorCode::DegenerateBasis, "a Borel subspace is a projective 3-space in P^9");
  }
  if (!gamma.contains(point_pe().projected_coords())) {
    throw Error(ErrorCode::MissingPe, "subspace does not pass through pi(p_e)");
  }
  std::array<Mat4, 4> basis;
  for (int i = 0; i < 4; ++i) basis[i] = DualLegPoint::from_projected(gamma.basis.col(i)).Z;
  Sym4Space s = Sym4Space::from_basis(basis, 1e-10);
  if (!s.contains_E()) throw Error(ErrorCode::MissingE, "lost E in the round trip");
  return s;
}

}  // namespace icosapod
