#pragma once

// Double points of the quartic symmetroid det(sum t_i B_i) = 0.

#include <cstdint>
#include <optional>
#include <vector>

#include "icosapod/homotopy.hpp"
#include "icosapod/sym4.hpp"

namespace icosapod {

struct NodeOptions {
  TrackOptions track;
  double tol_gradient = 1e-8;  // relative size of the full gradient at a node
  double tol_rank = 1e-8;      // sigma_3 / sigma_1 of the node matrix
};

struct SymmetroidNode {
  SolutionCluster cluster;  // point: t in P^3, unit norm, largest entry real positive
  Mat4c matrix;             // sum t_i B_i, unit Frobenius norm
  double rank_ratio = 0.0;  // sigma_3 / sigma_1
  double hessian_ratio = 0.0;  // sigma_3 / sigma_1 of the Hessian (0 for degenerate nodes)
  /// Real nodes: matrix with trace >= 0, and whether it is semidefinite.
  std::optional<Mat4> real_matrix;
  std::optional<bool> psd;
  bool near_degenerate = false;
};

struct NodeResult {
  std::vector<SymmetroidNode> nodes;
  int multiplicity_sum = 0;
  int paths = 0;
};

/// Slices grad f = 0 to three random combinations of the partials on a random
/// affine chart (27 paths), keeps endpoints where the whole gradient vanishes
/// and the matrix has rank 2. Throws DegenerateSpace on positive-dimensional
/// singular loci.
NodeResult solve_symmetroid_nodes(const Sym4Space& space, std::uint64_t seed,
                                  const NodeOptions& options = {});

}  // namespace icosapod
