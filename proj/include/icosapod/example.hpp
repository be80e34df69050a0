#pragma once

// The published line-symmetric hexapod: six legs from three point pairs and a
// half-turn axis, all given as exact rationals.

#include <array>
#include <string>

#include "icosapod/borel.hpp"
#include "icosapod/study.hpp"
#include "icosapod/sym4.hpp"

namespace icosapod {

/// Decimal numerator and denominator. Some exceed 64 bits.
struct Rational {
  std::string num;
  std::string den = "1";

  double value() const;
};

using RationalVec3 = std::array<Rational, 3>;

struct ExampleData {
  std::array<RationalVec3, 6> platform;  // p_i
  std::array<RationalVec3, 6> base;      // P_i
  RationalVec3 line_point;
  RationalVec3 line_direction;
  std::array<Rational, 6> d2;
};

struct NumericExample {
  std::array<Vec3, 6> platform;
  std::array<Vec3, 6> base;
  LineR3 line;
  std::array<double, 6> d2;
};

const ExampleData& worked_example();
NumericExample to_numeric(const ExampleData& data);
Vec3 value(const RationalVec3& v);

struct ExampleCheck {
  std::array<double, 6> computed{};
  std::array<double, 6> expected{};
  std::array<double, 6> relative_error{};
  double max_relative_error = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Recomputes |sigma0(p_i) - P_i|^2 and compares with the printed values.
ExampleCheck verify_example(const NumericExample& data, double tol = 1e-12);

/// The six legs (p_i, P_i, d_i^2) with the axis as seed line.
Pod example_pod();

/// span(E, alpha(p_1, P_1), alpha(p_2, P_2), alpha(p_3, P_3)) with homogenized points.
Sym4Space example_space();

}  // namespace icosapod
