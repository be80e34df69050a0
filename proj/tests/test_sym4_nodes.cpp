#include <Eigen/Dense>
#include <chrono>

#include "doctest.h"
#include "helpers.hpp"
#include "icosapod/borel.hpp"
#include "icosapod/nodes.hpp"
#include "icosapod/sym4.hpp"

using namespace icosapod;
using namespace icosapod::testing;

TEST_CASE("from_basis detects E and rejects dependent bases") {
  std::mt19937_64 rng(3);
  const Mat4 B1 = random_symmetric(rng), B2 = random_symmetric(rng);
  auto s = Sym4Space::from_basis({B1, matrix_E() + B1, B2, random_symmetric(rng)});
  REQUIRE(s.contains_E());
  Mat4 e = Mat4::Zero();
  for (int i = 0; i < 4; ++i) e += (*s.e_coefficients)(i) * s.basis[i];
  CHECK((e - matrix_E()).norm() < 1e-12);

  CHECK_FALSE(Sym4Space::from_basis({B1, B2, random_symmetric(rng), random_symmetric(rng)}).contains_E());
  CHECK(error_code_of([&] { Sym4Space::from_basis({B1, B2, B1 + B2, matrix_E()}); }) ==
        ErrorCode::DegenerateBasis);
}

TEST_CASE("symmetroid polynomial agrees with the determinant") {
  std::mt19937_64 rng(4);
  const auto s = random_space_with_E(11);
  const Polynomial f = symmetroid_polynomial(s);
  CHECK(f.degree() == 4);
  for (int k = 0; k < 10; ++k) {
    const Vec4 t = random_vec4(rng);
    const double det = s.matrix(t).determinant();
    CHECK(std::abs(f(t.cast<Complex>()) - det) < 1e-10 * (1.0 + std::abs(det)));
    CHECK(std::abs(symmetroid_det(s, t) - det) < 1e-10 * (1.0 + std::abs(det)));
  }
  // diagonal space: det = t0 t1 t2 t3
  std::array<Mat4, 4> diag;
  for (int i = 0; i < 4; ++i) diag[i] = Mat4::Zero(), diag[i](i, i) = 1.0;
  const auto d = Sym4Space::from_basis(diag);
  const Polynomial fd = symmetroid_polynomial(d);
  CHECK(fd.terms().size() == 1);
  CHECK(std::abs(fd.coefficient({1, 1, 1, 1}) - 1.0) < 1e-14);
}

TEST_CASE("Euler identity for the quartic") {
  std::mt19937_64 rng(5);
  const auto s = random_space_with_E(12);
  const Polynomial f = symmetroid_polynomial(s);
  const Vec4c t = random_vec4(rng).cast<Complex>();
  Complex e = 0.0;
  for (int i = 0; i < 4; ++i) e += t(i) * f.derivative(i)(t);
  CHECK(std::abs(e - 4.0 * f(t)) < 1e-10 * (1.0 + std::abs(f(t))));
}

TEST_CASE("congruence keeps the determinant up to det(g)^2") {
  std::mt19937_64 rng(6);
  const auto s = random_space_with_E(13);
  Mat4 g;
  for (int i = 0; i < 4; ++i) g.col(i) = random_vec4(rng);
  const auto c = congruence(s, g);
  const Vec4 t = random_vec4(rng);
  CHECK(std::abs(symmetroid_det(c, t) - g.determinant() * g.determinant() * symmetroid_det(s, t)) <
        1e-9 * (1.0 + std::abs(symmetroid_det(c, t))));
}

TEST_CASE("random spaces have ten rank-2 nodes") {
  int ten = 0;
  for (std::uint64_t k = 0; k < 10; ++k) {
    const auto s = random_space_with_E(100 + k);
    const NodeResult r = solve_symmetroid_nodes(s, k);
    CHECK(r.paths == 27);
    if (r.multiplicity_sum == 10) ++ten;
    int real = 0;
    for (const auto& n : r.nodes) {
      CHECK(n.rank_ratio < 1e-8);
      CHECK(n.cluster.residual < 1e-8);
      if (n.cluster.real) {
        ++real;
        CHECK(n.psd.has_value());
      } else {
        CHECK(n.cluster.conjugate.has_value());
      }
    }
    CHECK(real % 2 == 0);
  }
  CHECK(ten >= 9);
}

TEST_CASE("planted node is recovered") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 5; ++k) {
    Mat4 plant;
    const auto s = planted_space(rng, plant);
    const NodeResult r = solve_symmetroid_nodes(s, 40 + k);
    double best = 1.0;
    for (const auto& n : r.nodes) best = std::min(best, projective_distance(n.matrix, plant.cast<Complex>()));
    CHECK(best < 1e-8);
  }
}

TEST_CASE("nodes are deterministic per seed") {
  const auto s = random_space_with_E(21);
  const NodeResult a = solve_symmetroid_nodes(s, 9);
  const NodeResult b = solve_symmetroid_nodes(s, 9);
  REQUIRE(a.nodes.size() == b.nodes.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    CHECK(a.nodes[i].cluster.point == b.nodes[i].cluster.point);
  }
}

TEST_CASE("diagonal space is degenerate") {
  std::array<Mat4, 4> diag;
  for (int i = 0; i < 4; ++i) diag[i] = Mat4::Zero(), diag[i](i, i) = 1.0;
  const auto d = Sym4Space::from_basis(diag);
  CHECK(error_code_of([&] { solve_symmetroid_nodes(d, 1); }) == ErrorCode::DegenerateSpace);
}
