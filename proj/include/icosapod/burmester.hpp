#pragma once

// Spatial Burmester problem: platform points whose images under seven poses
// lie on a common sphere.

#include <cstdint>
#include <vector>

#include "icosapod/homotopy.hpp"
#include "icosapod/leg_space.hpp"
#include "icosapod/study.hpp"

namespace icosapod {

using Vec3c = Eigen::Vector3cd;

struct BurmesterSolution {
  Vec3c a;  // platform point
  Vec3c b;  // sphere center (base point)
  Complex d2;
  bool real = false;
  SolutionCluster cluster;

  Leg leg() const { return Leg{a.real(), b.real(), d2.real()}; }
};

struct BurmesterResult {
  std::vector<BurmesterSolution> solutions;
  int multiplicity_sum = 0;
  int real_count = 0;  // counted with multiplicity
  TrackResult track;
};

/// Throws DegeneratePoses unless the 7 poses span a P^6 in the Study quadric
/// (rank 7 of the normalized 17-coordinate vectors).
BurmesterResult solve_burmester(const std::vector<StudyPoint>& poses, std::uint64_t seed,
                                const TrackOptions& options = {});

/// The 6 bilinear equations in (a, b), used by the solver and the tests.
PolySystem burmester_system(const std::vector<StudyPoint>& poses);

}  // namespace icosapod
