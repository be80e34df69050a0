#include <Eigen/Dense>

#include "doctest.h"
#include "helpers.hpp"
#include "icosapod/burmester.hpp"
#include "icosapod/example.hpp"
#include "icosapod/motion.hpp"

using namespace icosapod;
using namespace icosapod::testing;

namespace {

std::vector<StudyPoint> random_poses(std::mt19937_64& rng) {
  std::vector<StudyPoint> poses;
  for (int k = 0; k < 7; ++k) poses.push_back(embed_isometry(random_rotation(rng), random_vec3(rng)));
  return poses;
}

}  // namespace

TEST_CASE("identical poses are degenerate") {
  std::mt19937_64 rng(16);
  const StudyPoint p = embed_isometry(random_rotation(rng), random_vec3(rng));
  const std::vector<StudyPoint> poses(7, p);
  CHECK(error_code_of([&] { solve_burmester(poses, 1); }) == ErrorCode::DegeneratePoses);
  CHECK(error_code_of([&] { solve_burmester({p, p, p}, 1); }) == ErrorCode::DegeneratePoses);
}

TEST_CASE("random poses give twenty solutions") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 3; ++k) {
    const auto poses = random_poses(rng);
    const BurmesterResult r = solve_burmester(poses, 10 + k);
    CHECK(r.multiplicity_sum == 20);
    CHECK(r.real_count % 2 == 0);
    CHECK(r.track.paths.size() == 64);
    for (const auto& s : r.solutions) {
      // every pose puts a on the same sphere
      for (const auto& p : poses) {
        const Mat3 R = p.M / p.h;
        const Vec3 t = p.y / p.h;
        const Vec3c d = R.cast<Complex>() * s.a + t.cast<Complex>() - s.b;
        const Complex d2 = d.transpose() * d;
        CHECK(std::abs(d2 - s.d2) < 1e-8 * (1.0 + std::abs(s.d2)));
      }
    }
  }
}

TEST_CASE("poses from the icosapod motion recover its legs") {
  const Pod hexapod = example_pod();
  const BuildResult built = build_pod(example_space(), *hexapod.provenance.seed_line, 1);
  REQUIRE(built.pod.legs.size() == 20);
  const Trajectory t = trace(built.pod, *hexapod.provenance.seed_line, 1000);
  const auto poses = sample_poses(t, 7);
  const BurmesterResult r = solve_burmester(poses, 2);
  CHECK(r.multiplicity_sum == 20);
  CHECK(r.real_count == 20);
  for (const auto& leg : built.pod.legs) {
    double best = 1.0;
    for (const auto& s : r.solutions) {
      if (!s.real) continue;
      const Leg l = s.leg();
      best = std::min(best, (l.a - leg.a).norm() + (l.b - leg.b).norm() + std::abs(l.d2 - leg.d2));
    }
    CHECK(best < 1e-8);
  }
}
