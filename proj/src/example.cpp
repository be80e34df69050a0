#include "icosapod/example.hpp"

#include <cstdlib>

#include "icosapod/leg_space.hpp"

namespace icosapod {

namespace {

// long double keeps the 37-digit numerators within one rounding of the true ratio
long double parse_ld(const std::string& s) { return std::strtold(s.c_str(), nullptr); }

ExampleData make_example() {
  ExampleData d;
  const RationalVec3 P1{{{"-19493", "142100"}, {"-2088", "94325"}, {"-24", "9625"}}};
  const RationalVec3 p1{{{"-36411", "267844"}, {"-1608", "177793"}, {"504", "25399"}}};
  const RationalVec3 P2{{{"-269", "5000"}, {"39", "1000"}, {"17", "500"}}};
  const RationalVec3 p2{{{"-47", "368"}, {"-12", "1771"}, {"21", "1265"}}};
  const RationalVec3 P3{{{"-1863", "14645"}, {"-106851", "1555400"}, {"2509", "222200"}}};
  const RationalVec3 p3{{{"-15185", "112462"}, {"-120", "149303"}, {"48", "3047"}}};
  // p4 = P1, P4 = p1 and so on
  d.platform = {p1, p2, p3, P1, P2, P3};
  d.base = {P1, P2, P3, p1, p2, p3};
  d.line_point = {{{"-1", "10"}, {"0"}, {"0"}}};
  d.line_direction = {{{"1"}, {"7003716944", "10000000000"}, {"8", "10"}}};
  const Rational d1{"1081643179736912972309543483891375692",
                    "276669953748621822688942197018838171875"};
  const Rational d2{"219482305781081742844809989061", "29002829339836395492656900000000"};
  const Rational d3{"4185335506762812187908674782558830797",
                    "636621874987061375644008358435317156000"};
  d.d2 = {d1, d2, d3, d1, d2, d3};
  return d;
}

}  // namespace

double Rational::value() const {
  return static_cast<double>(parse_ld(num) / parse_ld(den));
}

Vec3 value(const RationalVec3& v) { return Vec3(v[0].value(), v[1].value(), v[2].value()); }

const ExampleData& worked_example() {
  static const ExampleData data = make_example();
  return data;
}

NumericExample to_numeric(const ExampleData& data) {
  NumericExample n;
  for (int i = 0; i < 6; ++i) {
    n.platform[i] = value(data.platform[i]);
    n.base[i] = value(data.base[i]);
    n.d2[i] = data.d2[i].value();
  }
  n.line = LineR3{value(data.line_point), value(data.line_direction)};
  return n;
}

ExampleCheck verify_example(const NumericExample& data, double tol) {
  ExampleCheck out;
  out.tol = tol;
  const StudyPoint sigma = line_to_halfturn(data.line);
  for (int i = 0; i < 6; ++i) {
    out.computed[i] = (apply(sigma, data.platform[i]) - data.base[i]).squaredNorm();
    out.expected[i] = data.d2[i];
    out.relative_error[i] = std::abs(out.computed[i] - out.expected[i]) / std::abs(out.expected[i]);
    out.max_relative_error = std::max(out.max_relative_error, out.relative_error[i]);
  }
  out.pass = out.max_relative_error < tol;
  return out;
}

Pod example_pod() {
  const NumericExample n = to_numeric(worked_example());
  Pod pod;
  for (int i = 0; i < 6; ++i) pod.legs.push_back(Leg{n.platform[i], n.base[i], n.d2[i]});
  pod.provenance.source = "worked-example";
  pod.provenance.seed_line = n.line.canonical();
  pod.real_finite = 6;
  return pod;
}

Sym4Space example_space() {
  const NumericExample n = to_numeric(worked_example());
  std::array<Mat4, 4> basis;
  basis[0] = matrix_E();
  for (int i = 0; i < 3; ++i) {
    Vec4 a, b;
    a << 1.0, n.platform[i];
    b << 1.0, n.base[i];
    basis[i + 1] = a * b.transpose() + b * a.transpose();
  }
  return Sym4Space::from_basis(basis);
}

}  // namespace icosapod
