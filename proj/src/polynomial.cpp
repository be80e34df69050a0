#include "icosapod/polynomial.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace icosapod {

Polynomial Polynomial::constant(int nvars, Complex c) {
  Polynomial p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  Polynomial p(nvars);
  Exponent e(nvars, 0);
  e[index] = 1;
  p.add_term(e, 1.0);
  return p;
}

Polynomial Polynomial::linear(int nvars, Complex c0, const VecXc& coeffs) {
  Polynomial p = constant(nvars, c0);
  for (int i = 0; i < nvars; ++i) {
    Exponent e(nvars, 0);
    e[i] = 1;
    p.add_term(e, coeffs(i));
  }
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Polynomial::add_term(const Exponent& e, Complex c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
  if (c == Complex(0.0)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Complex(0.0)) terms_.erase(it);
  }
}

Complex Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex(0.0) : it->second;
}

Complex Polynomial::operator()(const VecXc& x) const {
  Complex sum = 0.0;
  for (const auto& [e, c] : terms_) {
    Complex m = c;
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) m *= x(i);
    }
    sum += m;
  }
  return sum;
}

double Polynomial::magnitude(const VecXc& x) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = std::abs(c);
    for (int i = 0; i < nvars_; ++i) m *= std::pow(std::abs(x(i)), e[i]);
    sum += m;
  }
  return sum;
}

Polynomial Polynomial::derivative(int index) const {
  Polynomial d(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent f = e;
    f[index] -= 1;
    d.add_term(f, c * static_cast<double>(e[index]));
  }
  return d;
}

Polynomial Polynomial::homogenize() const {
  const int deg = degree();
  Polynomial h(nvars_ + 1);
  for (const auto& [e, c] : terms_) {
    Exponent f(nvars_ + 1);
    f[0] = deg - std::accumulate(e.begin(), e.end(), 0);
    std::copy(e.begin(), e.end(), f.begin() + 1);
    h.add_term(f, c);
  }
  return h;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& values) const {
  if (static_cast<int>(values.size()) != nvars_) throw std::invalid_argument("compose arity");
  const int target = values.empty() ? 0 : values.front().nvars();
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial m = constant(target, c);
    for (int i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) m = m * values[i];
    }
    out += m;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Polynomial::Exponent e(a.nvars());
      for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial pow(const Polynomial& p, int k) {
  Polynomial out = Polynomial::constant(p.nvars(), 1.0);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

std::vector<int> PolySystem::degrees() const {
  std::vector<int> d;
  d.reserve(polys.size());
  for (const auto& p : polys) d.push_back(p.degree());
  return d;
}

CompiledSystem::CompiledSystem(const PolySystem& system) : nvars_(system.nvars), max_degree_(0) {
  for (const auto& p : system.polys) {
    std::vector<Term> eq;
    double norm = 0.0;
    for (const auto& [e, c] : p.terms()) {
      eq.push_back({c, e});
      norm += std::abs(c);
      for (int v : e) max_degree_ = std::max(max_degree_, v);
    }
    equations_.push_back(std::move(eq));
    degrees_.push_back(p.degree());
    coeff_norms_.push_back(norm);
  }
}

void CompiledSystem::powers(const VecXc& x, std::vector<Complex>& table) const {
  const int stride = max_degree_ + 1;
  table.assign(static_cast<size_t>(nvars_ * stride), Complex(1.0));
  for (int i = 0; i < nvars_; ++i) {
    for (int k = 1; k <= max_degree_; ++k) table[i * stride + k] = table[i * stride + k - 1] * x(i);
  }
}

void CompiledSystem::evaluate(const VecXc& x, VecXc& values) const {
  std::vector<Complex> table;
  powers(x, table);
  const int stride = max_degree_ + 1;
  values.resize(size());
  for (int q = 0; q < size(); ++q) {
    Complex sum = 0.0;
    for (const auto& t : equations_[q]) {
      Complex m = t.coeff;
      for (int i = 0; i < nvars_; ++i) m *= table[i * stride + t.exps[i]];
      sum += m;
    }
    values(q) = sum;
  }
}

void CompiledSystem::evaluate(const VecXc& x, VecXc& values, MatXc& jacobian) const {
  std::vector<Complex> table;
  powers(x, table);
  const int stride = max_degree_ + 1;
  values.resize(size());
  jacobian.setZero(size(), nvars_);
  for (int q = 0; q < size(); ++q) {
    Complex sum = 0.0;
    for (const auto& t : equations_[q]) {
      Complex m = t.coeff;
      for (int i = 0; i < nvars_; ++i) m *= table[i * stride + t.exps[i]];
      sum += m;
      for (int j = 0; j < nvars_; ++j) {
        if (t.exps[j] == 0) continue;
        Complex d = t.coeff * static_cast<double>(t.exps[j]);
        for (int i = 0; i < nvars_; ++i) d *= table[i * stride + t.exps[i] - (i == j ? 1 : 0)];
        jacobian(q, j) += d;
      }
    }
    values(q) = sum;
  }
}

Eigen::VectorXd CompiledSystem::magnitudes(const VecXc& x) const {
  std::vector<Complex> table;
  powers(x, table);
  const int stride = max_degree_ + 1;
  Eigen::VectorXd out(size());
  for (int q = 0; q < size(); ++q) {
    double sum = 0.0;
    for (const auto& t : equations_[q]) {
      double m = std::abs(t.coeff);
      for (int i = 0; i < nvars_; ++i) m *= std::abs(table[i * stride + t.exps[i]]);
      sum += m;
    }
    out(q) = sum;
  }
  return out;
}

Eigen::VectorXd CompiledSystem::scales(const VecXc& x) const {
  const double r = std::max(1.0, x.size() ? x.cwiseAbs().maxCoeff() : 0.0);
  Eigen::VectorXd out(size());
  for (int q = 0; q < size(); ++q) out(q) = coeff_norms_[q] * std::pow(r, degrees_[q]);
  return out;
}

}  // namespace icosapod
