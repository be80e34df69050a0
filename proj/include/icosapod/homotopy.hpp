#pragma once

// Total-degree homotopy continuation.
//
// The target system is homogenized and tracked on a random affine chart of
// P^n from the start system x_i^{d_i} = x_0^{d_i}, so paths heading to
// infinity stay bounded and end on the hyperplane x_0 = 0.

#include <cstdint>
#include <optional>
#include <vector>

#include "icosapod/polynomial.hpp"

namespace icosapod {

struct TrackOptions {
  double tol_track = 1e-9;       // corrector tolerance while tracking (relative)
  double tol_residual = 1e-8;    // relative backward residual of accepted endpoints
  double tol_cluster = 1e-6;     // endpoint merge distance (relative)
  double tol_real = 1e-8;        // max imaginary part of real solutions (relative)
  double tol_infinity = 1e-4;    // |x0| / |x| below this marks a stalled path as infinite
  double singular_condition = 1e10;
  double initial_step = 0.01;
  double max_step = 0.1;
  double min_step = 1e-14;
  int max_steps = 20000;
  double max_failure_fraction = 0.1;
  int max_attempts = 4;
  bool check_positive_dimensional = true;
};

struct SolutionCluster {
  VecXc point;
  int multiplicity = 1;
  double residual = 0.0;
  double condition = 1.0;
  bool real = false;
  std::optional<std::size_t> conjugate;
};

enum class PathStatus { Finite, AtInfinity, Failed };

struct PathReport {
  PathStatus status = PathStatus::Failed;
  VecXc endpoint;  // homogeneous chart coordinates
  double t = 0.0;  // homotopy parameter reached
  int steps = 0;
};

struct TrackResult {
  std::vector<SolutionCluster> clusters;
  std::vector<PathReport> paths;
  int at_infinity = 0;
  int failures = 0;
  int attempts = 0;
  std::uint64_t seed = 0;  // seed of the accepted attempt

  int multiplicity_sum() const;
};

/// Tracks prod(deg) paths. Deterministic for a fixed (system, seed, options).
/// Throws PositiveDimensional when singular endpoints move between two
/// independent runs.
TrackResult track_total_degree(const PolySystem& system, std::uint64_t seed,
                               const TrackOptions& options = {});

/// Newton polish of an affine point. Returns the relative residual.
double refine(const CompiledSystem& system, VecXc& x, int max_iterations = 30);

/// Max over equations of |f_i(x)| / (sum |c| |x^e|).
double relative_residual(const CompiledSystem& system, const VecXc& x);

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace icosapod
