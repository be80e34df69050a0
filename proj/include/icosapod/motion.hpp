#pragma once

// Pseudo-arclength continuation of the line-symmetric self-motion of a pod.
//
// The state is a line (c, u) with gauges |u|^2 = 1 and <c, u> = 0. A leg
// (a, b, d2) contributes |sigma(a) - b|^2 - d2 with sigma the half-turn about
// the line.

#include <filesystem>
#include <string>
#include <vector>

#include "icosapod/borel.hpp"
#include "icosapod/study.hpp"

namespace icosapod {

struct TraceOptions {
  double initial_step = 1e-3;
  double max_step = 5e-2;
  double min_step = 1e-10;
  double tol_trace = 1e-9;
  double tol_corank = 1e-7;  // relative singular value threshold
  int max_corrector_iterations = 6;
  double closure_tol = 1e-6;
  int closure_min_steps = 10;
  bool stop_at_closure = true;
  int direction = 1;  // sign of the initial tangent
  bool record_images = true;
};

struct MotionSample {
  double s = 0.0;
  LineR3 line;
  StudyPoint sigma;
  Eigen::VectorXd residuals;
  std::vector<Vec3> platform_images;
};

enum class TraceStop { Steps, Closure, CorankChange, CorrectorDivergence };

struct Trajectory {
  std::vector<MotionSample> samples;
  bool closed = false;
  TraceStop reason = TraceStop::Steps;
  std::string message;
};

/// Throws RankDeficientStart unless the constraints have corank exactly one
/// at the start. A corrector failure ends the trajectory with the last good
/// sample and reason CorrectorDivergence.
Trajectory trace(const Pod& pod, const LineR3& start, int steps, const TraceOptions& options = {});

/// Leg residuals |sigma(a) - b|^2 - d2 at a half-turn.
Eigen::VectorXd leg_residuals(const Pod& pod, const StudyPoint& sigma);

/// k poses spread evenly in arclength (a closed loop is not sampled twice at the seam).
std::vector<StudyPoint> sample_poses(const Trajectory& traj, int k);

/// Header s,c1,c2,c3,u1,u2,u3 then p<i>_x,p<i>_y,p<i>_z for each platform point;
/// values printed with 17 significant digits.
std::string to_csv(const Trajectory& traj);
void export_csv(const Trajectory& traj, const std::filesystem::path& path);

/// Reads a file written by export_csv. sigma is rebuilt from the line.
Trajectory read_csv(const std::filesystem::path& path);
Trajectory parse_csv(const std::string& text);

}  // namespace icosapod
