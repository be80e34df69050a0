#pragma once

#include <Eigen/Dense>
#include <random>

#include "doctest.h"
#include "icosapod/error.hpp"
#include "icosapod/leg_space.hpp"
#include "icosapod/study.hpp"
#include "icosapod/sym4.hpp"

namespace icosapod::testing {

inline Mat3 random_rotation(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Quaterniond q(n(rng), n(rng), n(rng), n(rng));
  return q.normalized().toRotationMatrix();
}

inline Vec3 random_vec3(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  return {n(rng), n(rng), n(rng)};
}

inline LineR3 random_line(std::mt19937_64& rng) {
  return LineR3{random_vec3(rng), random_vec3(rng)}.canonical();
}

inline Mat4 random_symmetric(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Mat4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = n(rng);
  return 0.5 * (g + g.transpose());
}

inline Vec4 random_vec4(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng), n(rng), n(rng)};
}

// distance between the lines [a], [b] in matrix space
inline double projective_distance(const Mat4c& a, const Mat4c& b) {
  const Complex s = (b.conjugate().cwiseProduct(a)).sum() / b.squaredNorm();
  return (a - s * b).norm() / a.norm();
}

// span(E, a b^T + b a^T, R1, R2)
inline Sym4Space planted_space(std::mt19937_64& rng, Mat4& plant) {
  const Vec4 a = random_vec4(rng), b = random_vec4(rng);
  plant = a * b.transpose() + b * a.transpose();
  return Sym4Space::from_basis({matrix_E(), plant, random_symmetric(rng), random_symmetric(rng)});
}

template <typename F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected icosapod::Error");
  return ErrorCode::IO;
}

}  // namespace icosapod::testing
