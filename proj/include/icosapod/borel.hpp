#pragma once

// Borel's construction of line-symmetric mobile pods from a Borel subspace,
// plus the random survey of reality counts.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icosapod/leg_space.hpp"
#include "icosapod/spectrahedra.hpp"

namespace icosapod {

struct Pod {
  std::vector<Leg> legs;

  struct Provenance {
    std::string source;
    std::optional<Sym4Space> space;
    std::optional<LineR3> seed_line;
    std::optional<std::uint64_t> seed;
    std::vector<int> node_multiplicities;
  } provenance;

  int real_finite = 0;
  int at_infinity = 0;
  int complex_legs = 0;
};

struct DaggerReport {
  bool exactly_20_real_finite = false;
  bool finite_leg_set = false;
  bool collinear_base = false;
  bool collinear_platform = false;
  std::vector<std::string> reasons;

  bool pass() const {
    return exactly_20_real_finite && finite_leg_set && !collinear_base && !collinear_platform;
  }
};

struct BuildReport {
  int node_count = 0;
  std::vector<int> multiplicities;
  SpectraType type;
  int real_finite_legs = 0;
  int legs_at_infinity = 0;
  int complex_legs = 0;
  double max_seed_residual = 0.0;
  double max_seed_residual_relative = 0.0;  // divided by 1 + |a|^2 + |b|^2 + d2
  DaggerReport dagger;
};

struct BuildResult {
  Pod pod;
  BuildReport report;
  LinearSubspace lambda;       // span of the configuration curve, primal side
  LinearSubspace gamma_tilde;  // its annihilator, through p_e
};

/// Lambda = span(U, sigma0) with U the annihilator of pi^{-1}(Gamma), and
/// Gamma~ = Lambda^perp. Every node of the symmetroid lifts into Gamma~ and
/// gives the leg pair (a, b, d2), (b, a, d2).
BuildResult build_pod(const Sym4Space& space, const LineR3& seed_line, std::uint64_t seed,
                      const NodeOptions& options = {});

DaggerReport check_dagger(const Pod& pod);

/// Largest number of collinear points in the set.
int max_collinear(const std::vector<Vec3>& points, double tol = 1e-9);

/// E plus three points with iid N(0,1) projected coordinates (z00..z33, s01..s23),
/// so Z_ii = 2 z_ii and Z_ij = s_ij.
Sym4Space random_space_with_E(std::uint64_t seed);

struct SurveyResult {
  int samples = 0;
  std::uint64_t seed = 0;
  std::map<int, int> real_points_hist;
  std::map<int, int> real_preimage_hist;
  int degenerate = 0;
};

/// Sample i uses the stream derive_seed(seed, i); results do not depend on threads.
SurveyResult stats_survey(int samples, std::uint64_t seed, int threads = 0,
                          const NodeOptions& options = {});

}  // namespace icosapod
