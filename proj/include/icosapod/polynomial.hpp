#pragma once

#include <Eigen/Core>
#include <complex>
#include <map>
#include <vector>

namespace icosapod {

using Complex = std::complex<double>;
using VecXc = Eigen::VectorXcd;
using MatXc = Eigen::MatrixXcd;

/// Sparse multivariate polynomial with complex coefficients.
class Polynomial {
 public:
  using Exponent = std::vector<int>;

  explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(int nvars, Complex c);
  static Polynomial variable(int nvars, int index);
  /// c0 + sum_i coeffs[i] * x_i
  static Polynomial linear(int nvars, Complex c0, const VecXc& coeffs);

  int nvars() const { return nvars_; }
  int degree() const;
  const std::map<Exponent, Complex>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, Complex c);
  Complex coefficient(const Exponent& e) const;

  Complex operator()(const VecXc& x) const;
  Polynomial derivative(int index) const;

  /// Adds a leading homogenizing variable x0.
  Polynomial homogenize() const;
  /// Substitutes x_i := values[i] (all over the same ring).
  Polynomial compose(const std::vector<Polynomial>& values) const;
  /// Sum of |c| * |x^e|, the scale for relative residuals.
  double magnitude(const VecXc& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(Complex c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }
  friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  int nvars_;
  std::map<Exponent, Complex> terms_;
};

Polynomial pow(const Polynomial& p, int k);

struct PolySystem {
  int nvars = 0;
  std::vector<Polynomial> polys;

  std::vector<int> degrees() const;
  bool square() const { return static_cast<int>(polys.size()) == nvars; }
};

/// Flattened evaluator for values and Jacobians.
class CompiledSystem {
 public:
  explicit CompiledSystem(const PolySystem& system);

  int nvars() const { return nvars_; }
  int size() const { return static_cast<int>(equations_.size()); }

  void evaluate(const VecXc& x, VecXc& values) const;
  void evaluate(const VecXc& x, VecXc& values, MatXc& jacobian) const;
  /// Per-equation sum |c| |x^e|.
  Eigen::VectorXd magnitudes(const VecXc& x) const;
  /// Per-equation residual scale: sum |c| times max(1, |x|_inf)^deg.
  Eigen::VectorXd scales(const VecXc& x) const;

 private:
  struct Term {
    Complex coeff;
    std::vector<int> exps;
  };
  int nvars_;
  int max_degree_;
  std::vector<std::vector<Term>> equations_;
  std::vector<int> degrees_;
  std::vector<double> coeff_norms_;

  void powers(const VecXc& x, std::vector<Complex>& table) const;
};

}  // namespace icosapod
