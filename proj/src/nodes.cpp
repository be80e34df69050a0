#include "icosapod/nodes.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "icosapod/error.hpp"

namespace icosapod {

namespace {

Vec4c canonical_projective(Vec4c t) {
  t /= t.norm();
  Eigen::Index k = 0;
  t.cwiseAbs().maxCoeff(&k);
  return t * (std::abs(t(k)) / t(k));
}

double sigma_ratio(const MatXc& m, int index) {
  Eigen::JacobiSVD<MatXc> svd(m);
  const auto& sv = svd.singularValues();
  return sv(0) > 0.0 ? sv(index) / sv(0) : 0.0;
}

// Gauss-Newton on grad f(t) = 0 with the chart conj(t0)^T t = 1.
Vec4c polish_node(const CompiledSystem& gradient, Vec4c t) {
  t /= t.norm();
  const Vec4c anchor = t;
  VecXc g;
  MatXc H;
  for (int k = 0; k < 8; ++k) {
    gradient.evaluate(t, g, H);
    Eigen::Matrix<Complex, 5, 4> J;
    Eigen::Matrix<Complex, 5, 1> rhs;
    J.topRows<4>() = H;
    J.row(4) = anchor.adjoint();
    rhs.head<4>() = g;
    rhs(4) = anchor.dot(t) - 1.0;
    const Vec4c dt = J.colPivHouseholderQr().solve(rhs);
    if (!dt.allFinite()) break;
    t -= dt;
    if (dt.norm() < 1e-15 * t.norm()) break;
  }
  return t;
}

struct Balanced {
  Sym4Space space;
  Mat4 coefficients;  // t = coefficients * t_balanced
};

// Alternates a Frobenius-orthonormal basis with the congruence
// (sum B_i^2)^(-1/4). Neither step moves the nodes in P^3 beyond the linear
// change of coordinates recorded in `coefficients`.
Balanced balance(const Sym4Space& space) {
  Balanced out{space, Mat4::Identity()};
  auto& B = out.space.basis;
  for (int iter = 0; iter < 30; ++iter) {
    Mat4 gram;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) gram(i, j) = (B[i] * B[j]).trace();
    const Mat4 T = gram.llt().matrixL().transpose().solve(Mat4::Identity());
    std::array<Mat4, 4> next;
    for (int j = 0; j < 4; ++j) {
      next[j].setZero();
      for (int i = 0; i < 4; ++i) next[j] += T(i, j) * B[i];
    }
    B = next;
    out.coefficients = out.coefficients * T;
    if (iter == 29) break;
    Mat4 S = Mat4::Zero();
    for (const auto& b : B) S += b * b;
    Eigen::SelfAdjointEigenSolver<Mat4> eig(S);
    const Vec4 lam = eig.eigenvalues();
    if (lam.minCoeff() <= 1e-14 * lam.maxCoeff()) break;
    const Mat4 g = eig.eigenvectors() * lam.array().pow(-0.25).matrix().asDiagonal() *
                   eig.eigenvectors().transpose();
    if ((g * std::pow(lam.prod(), 0.0625) - Mat4::Identity()).norm() < 1e-12) break;
    for (auto& b : B) b = g * b * g;
  }
  out.space.e_coefficients.reset();
  return out;
}

}  // namespace

NodeResult solve_symmetroid_nodes(const Sym4Space& input, std::uint64_t seed,
                                  const NodeOptions& options) {
  const Balanced bal = balance(input);
  const Sym4Space& space = bal.space;
  const Polynomial f = symmetroid_polynomial(space);
  PolySystem grad{4, {}};
  for (int j = 0; j < 4; ++j) grad.polys.push_back(f.derivative(j));
  const CompiledSystem gradient(grad);
  double coeff_norm = 0.0;
  for (const auto& [e, c] : f.terms()) coeff_norm += std::abs(c);
  if (coeff_norm == 0.0) {
    throw Error(ErrorCode::DegenerateSpace, "the determinant vanishes identically");
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  auto cn = [&] { return Complex(n(rng), n(rng)); };
  // chart t = t0 + N w
  Vec4c t0;
  Eigen::Matrix<Complex, 4, 3> N;
  for (int i = 0; i < 4; ++i) {
    t0(i) = cn();
    for (int j = 0; j < 3; ++j) N(i, j) = cn();
  }
  Eigen::Matrix<Complex, 3, 4> slice;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) slice(i, j) = cn();

  std::vector<Polynomial> chart;
  for (int i = 0; i < 4; ++i) chart.push_back(Polynomial::linear(3, t0(i), N.row(i).transpose()));
  std::vector<Polynomial> partials;
  for (int j = 0; j < 4; ++j) partials.push_back(grad.polys[j].compose(chart));
  PolySystem sliced{3, {}};
  for (int i = 0; i < 3; ++i) {
    Polynomial p(3);
    for (int j = 0; j < 4; ++j) p += slice(i, j) * partials[j];
    sliced.polys.push_back(p);
  }

  TrackResult tracked;
  try {
    tracked = track_total_degree(sliced, derive_seed(seed, 1), options.track);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::PositiveDimensional) {
      throw Error(ErrorCode::DegenerateSpace, "singular locus of the symmetroid is not finite");
    }
    throw;
  }

  NodeResult result;
  result.paths = static_cast<int>(tracked.paths.size());
  for (const auto& c : tracked.clusters) {
    Vec4c t = canonical_projective(t0 + N * c.point);
    VecXc g;
    // drop slice-only endpoints before polishing
    gradient.evaluate(t, g);
    if (g.norm() > std::sqrt(options.tol_gradient) * coeff_norm) continue;
    t = canonical_projective(polish_node(gradient, t));
    gradient.evaluate(t, g);
    if (g.norm() > options.tol_gradient * coeff_norm) continue;
    SymmetroidNode node;
    {
      const Mat4c mb = space.matrix(t);
      if (sigma_ratio(mb, 2) >= options.tol_rank) continue;
      if (sigma_ratio(mb, 1) < options.tol_rank) continue;  // rank 1
    }
    VecXc gv;
    MatXc H;
    gradient.evaluate(t, gv, H);
    node.hessian_ratio = sigma_ratio(H, 2);
    node.near_degenerate = c.condition > options.track.singular_condition ||
                           node.hessian_ratio < options.tol_rank;
    node.cluster = c;
    node.cluster.residual = g.norm() / coeff_norm;
    node.cluster.real = t.imag().cwiseAbs().maxCoeff() <= options.track.tol_real;
    t = canonical_projective(bal.coefficients.cast<Complex>() * t);
    node.matrix = input.matrix(t);
    node.matrix /= node.matrix.norm();
    node.rank_ratio = sigma_ratio(node.matrix, 2);
    node.cluster.point = t;
    node.cluster.conjugate.reset();
    if (node.cluster.real) {
      const Vec4 tr = t.real();
      node.cluster.point = tr.cast<Complex>();
      Mat4 m = input.matrix(tr);
      m /= m.norm();
      if (m.trace() < 0.0) m = -m;
      Eigen::SelfAdjointEigenSolver<Mat4> eig(m);
      Vec4 lam = eig.eigenvalues();
      std::sort(lam.data(), lam.data() + 4,
                [](double a, double b) { return std::abs(a) > std::abs(b); });
      node.real_matrix = m;
      node.psd = lam(0) * lam(1) > 0.0;
      node.matrix = m.cast<Complex>();
    }
    result.multiplicity_sum += c.multiplicity;
    result.nodes.push_back(std::move(node));
  }

  // merge nodes that the chart split (should not happen for generic input)
  std::sort(result.nodes.begin(), result.nodes.end(),
            [](const SymmetroidNode& a, const SymmetroidNode& b) {
              if (a.cluster.real != b.cluster.real) return a.cluster.real;
              for (int i = 0; i < 4; ++i) {
                const Complex x = a.cluster.point(i), y = b.cluster.point(i);
                if (x.real() != y.real()) return x.real() < y.real();
                if (x.imag() != y.imag()) return x.imag() < y.imag();
              }
              return false;
            });
  for (std::size_t i = 0; i < result.nodes.size(); ++i) {
    auto& a = result.nodes[i];
    if (a.cluster.real || a.cluster.conjugate) continue;
    for (std::size_t j = i + 1; j < result.nodes.size(); ++j) {
      auto& b = result.nodes[j];
      if (b.cluster.real || b.cluster.conjugate) continue;
      const Vec4c ca = canonical_projective(a.cluster.point.conjugate());
      if ((ca - b.cluster.point).norm() < 1e-6) {
        a.cluster.conjugate = j;
        b.cluster.conjugate = i;
        break;
      }
    }
  }
  return result;
}

}  // namespace icosapod
