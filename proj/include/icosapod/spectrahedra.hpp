#pragma once

#include <cstdint>

#include "icosapod/leg_space.hpp"
#include "icosapod/nodes.hpp"
#include "icosapod/sym4.hpp"

namespace icosapod {

/// a real nodes of the symmetroid, b of them on the spectrahedron.
struct SpectraType {
  int a = 0;
  int b = 0;

  bool even() const { return a % 2 == 0 && b % 2 == 0; }
  friend bool operator==(const SpectraType&, const SpectraType&) = default;
};

struct TypeResult {
  SpectraType type;
  NodeResult nodes;
};

/// Requires ten simple nodes; throws DegenerateSpace otherwise.
TypeResult compute_type(const Sym4Space& space, std::uint64_t seed, const NodeOptions& options = {});

/// Congruence g with g^T P g = E for a rank-3 positive semidefinite P.
/// Throws NoBoundaryRank3Point for any other rank or signature.
Mat4 congruence_to_E(const Mat4& P, double tol = kRankTol);

struct AdaptOptions {
  int starts = 100;
  int ascent_iterations = 200;
  int ray_attempts = 50;
};

/// A congruent copy of the space that contains E, built from a smooth rank-3
/// point on the boundary of the spectrahedron. Identity when E is already in.
Sym4Space adapt_contain_E(const Sym4Space& space, std::uint64_t seed, const AdaptOptions& options = {});

/// Borel subspace (projected side) of a space containing E.
LinearSubspace borel_from_space(const Sym4Space& space);
/// Inverse of borel_from_space; the subspace must pass through pi(p_e).
Sym4Space space_from_borel(const LinearSubspace& gamma);

}  // namespace icosapod
