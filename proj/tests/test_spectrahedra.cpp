#include <Eigen/Dense>

#include "doctest.h"
#include "helpers.hpp"
#include "icosapod/borel.hpp"
#include "icosapod/example.hpp"
#include "icosapod/spectrahedra.hpp"

using namespace icosapod;
using namespace icosapod::testing;

namespace {

Mat4 random_invertible(std::mt19937_64& rng) {
  Mat4 g;
  for (int i = 0; i < 4; ++i) g.col(i) = random_vec4(rng);
  return g;
}

}  // namespace

TEST_CASE("fixture space is type (10,0)") {
  const auto s = example_space();
  REQUIRE(s.contains_E());
  const TypeResult r = compute_type(s, 1);
  CHECK(r.type == SpectraType{10, 0});
  CHECK(r.nodes.multiplicity_sum == 10);
}

TEST_CASE("type is invariant under congruence") {
  std::mt19937_64 rng(8);
  for (std::uint64_t k = 0; k < 4; ++k) {
    const auto s = random_space_with_E(300 + k);
    const SpectraType t0 = compute_type(s, 1).type;
    CHECK(t0.even());
    const auto c = congruence(s, random_invertible(rng));
    CHECK(compute_type(c, 2).type == t0);
  }
  const auto c = congruence(example_space(), random_invertible(rng));
  CHECK(compute_type(c, 3).type == SpectraType{10, 0});
}

TEST_CASE("congruence_to_E") {
  std::mt19937_64 rng(9);
  Eigen::Matrix<double, 4, 3> v;
  for (int i = 0; i < 3; ++i) v.col(i) = random_vec4(rng);
  const Mat4 P = v * v.transpose();
  const Mat4 g = congruence_to_E(P);
  CHECK((g.transpose() * P * g - matrix_E()).norm() < 1e-10);

  const Mat4 rank2 = v.leftCols<2>() * v.leftCols<2>().transpose();
  CHECK(error_code_of([&] { congruence_to_E(rank2); }) == ErrorCode::NoBoundaryRank3Point);
  const Mat4 indefinite = v * Eigen::Vector3d(1.0, 1.0, -1.0).asDiagonal() * v.transpose();
  CHECK(error_code_of([&] { congruence_to_E(indefinite); }) == ErrorCode::NoBoundaryRank3Point);
}

TEST_CASE("adapt_contain_E moves a spectrahedron onto E") {
  std::mt19937_64 rng(10);
  const auto base = example_space();
  const auto moved = congruence(base, random_invertible(rng));
  REQUIRE_FALSE(moved.contains_E());
  const auto adapted = adapt_contain_E(moved, 5);
  CHECK(adapted.contains_E());
  CHECK(compute_type(adapted, 4).type == SpectraType{10, 0});

  // unchanged when E is already in the space
  const auto same = adapt_contain_E(base, 5);
  for (int i = 0; i < 4; ++i) CHECK((same.basis[i] - base.basis[i]).norm() == 0.0);
}

TEST_CASE("adapt_contain_E fails without an interior point") {
  std::mt19937_64 rng(11);
  // zero diagonal, so no matrix in the span is definite
  std::array<Mat4, 4> basis;
  for (int i = 0; i < 4; ++i) {
    basis[i] = Mat4::Zero();
    basis[i](0, 1) = basis[i](1, 0) = random_vec4(rng)(0);
    basis[i](2, 3) = basis[i](3, 2) = random_vec4(rng)(1);
    basis[i](0, 2) = basis[i](2, 0) = random_vec4(rng)(2);
    basis[i](1, 3) = basis[i](3, 1) = random_vec4(rng)(3);
  }
  const auto s = Sym4Space::from_basis(basis);
  AdaptOptions opt;
  opt.starts = 10;
  CHECK(error_code_of([&] { adapt_contain_E(s, 1, opt); }) == ErrorCode::NoBoundaryRank3Point);
}

TEST_CASE("Borel subspace round trip") {
  const auto s = random_space_with_E(400);
  const LinearSubspace g = borel_from_space(s);
  CHECK(g.side == Side::Projected);
  CHECK(g.dim() == 3);
  CHECK(g.contains(point_pe().projected_coords()));
  const auto back = space_from_borel(g);
  CHECK(back.contains_E());
  CHECK(borel_from_space(back).same_as(g));

  std::mt19937_64 rng(12);
  const auto no_e = Sym4Space::from_basis(
      {random_symmetric(rng), random_symmetric(rng), random_symmetric(rng), random_symmetric(rng)});
  CHECK(error_code_of([&] { borel_from_space(no_e); }) == ErrorCode::MissingE);
  Eigen::MatrixXd b(10, 4);
  for (int i = 0; i < 4; ++i) {
    DualLegPoint p;
    p.Z = no_e.basis[i];
    b.col(i) = p.projected_coords();
  }
  CHECK(error_code_of([&] { space_from_borel(LinearSubspace(Side::Projected, b)); }) ==
        ErrorCode::MissingPe);
}

TEST_CASE("compute_type rejects degenerate symmetroids") {
  std::array<Mat4, 4> diag;
  for (int i = 0; i < 4; ++i) diag[i] = Mat4::Zero(), diag[i](i, i) = 1.0;
  CHECK(error_code_of([&] { compute_type(Sym4Space::from_basis(diag), 1); }) ==
        ErrorCode::DegenerateSpace);
}
