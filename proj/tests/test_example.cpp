#include <boost/multiprecision/cpp_int.hpp>

#include "doctest.h"
#include "helpers.hpp"
#include "icosapod/example.hpp"
#include "icosapod/motion.hpp"

using namespace icosapod;
using Q = boost::multiprecision::cpp_rational;
using Z = boost::multiprecision::cpp_int;

namespace {

Q exact(const Rational& r) { return Q(Z(r.num), Z(r.den)); }

std::array<Q, 3> exact(const RationalVec3& v) { return {exact(v[0]), exact(v[1]), exact(v[2])}; }

Q dot(const std::array<Q, 3>& a, const std::array<Q, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

TEST_CASE("printed leg lengths hold exactly") {
  const ExampleData& d = worked_example();
  const auto c = exact(d.line_point), u = exact(d.line_direction);
  const Q uu = dot(u, u);
  for (int i = 0; i < 6; ++i) {
    const auto p = exact(d.platform[i]), P = exact(d.base[i]);
    // reflection of p in the axis
    std::array<Q, 3> pc{p[0] - c[0], p[1] - c[1], p[2] - c[2]};
    const Q s = dot(pc, u) / uu;
    std::array<Q, 3> diff;
    for (int k = 0; k < 3; ++k) diff[k] = 2 * (c[k] + s * u[k]) - p[k] - P[k];
    CHECK(dot(diff, diff) == exact(d.d2[i]));
  }
}

TEST_CASE("verify_example in double precision") {
  const NumericExample n = to_numeric(worked_example());
  const ExampleCheck ok = verify_example(n);
  CHECK(ok.pass);
  CHECK(ok.max_relative_error < 1e-12);
  CHECK(ok.expected[1] == doctest::Approx(219482305781081742844809989061.0 / 29002829339836395492656900000000.0).epsilon(1e-15));

  NumericExample bad = n;
  bad.platform[1](0) += 1e-6;
  const ExampleCheck perturbed = verify_example(bad);
  CHECK_FALSE(perturbed.pass);
  CHECK(perturbed.relative_error[1] > 1e-6);
  CHECK(perturbed.relative_error[0] < 1e-12);

  CHECK_FALSE(verify_example(n, 1e-20).pass);
}

TEST_CASE("example pod is a line-symmetric hexapod") {
  const Pod pod = example_pod();
  REQUIRE(pod.legs.size() == 6);
  const StudyPoint sigma = line_to_halfturn(*pod.provenance.seed_line);
  CHECK(leg_residuals(pod, sigma).cwiseAbs().maxCoeff() < 1e-15);
  for (int i = 0; i < 3; ++i) {
    CHECK((pod.legs[i].a - pod.legs[i + 3].b).norm() == 0.0);
    CHECK((pod.legs[i].b - pod.legs[i + 3].a).norm() == 0.0);
  }
}
