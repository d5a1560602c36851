#include "zonotopal/polynomial.hpp"

#include <cassert>
#include <sstream>

namespace zonotopal {

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.addTerm(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t index) {
  Polynomial p(variables);
  Exponents e(variables, 0);
  e.at(index) = 1;
  p.addTerm(e, 1);
  return p;
}

Polynomial Polynomial::linear(std::span<const Integer> alpha, const Integer& shift) {
  Polynomial p = constant(alpha.size(), Rational(shift));
  for (std::size_t i = 0; i < alpha.size(); ++i) p += variable(alpha.size(), i) * Rational(alpha[i]);
  return p;
}

Polynomial Polynomial::binomialOf(const Polynomial& f, unsigned m) {
  Polynomial p = constant(f.variables(), 1);
  for (unsigned j = 0; j < m; ++j) p = p * (f - constant(f.variables(), j));
  return p * Rational(1, factorial(m));
}

void Polynomial::addTerm(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto k : e) s += static_cast<int>(k);
    d = std::max(d, s);
  }
  return d;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::leadingForm() const {
  Polynomial p(vars_);
  const int d = degree();
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto k : e) s += static_cast<int>(k);
    if (s == d) p.addTerm(e, c);
  }
  return p;
}

Rational Polynomial::evaluate(std::span<const Integer> point) const {
  assert(point.size() == vars_);
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer m = 1;
    for (std::size_t i = 0; i < vars_; ++i) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), e[i]);
      m *= pw;
    }
    sum += c * Rational(m);
  }
  return sum;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial p = constant(vars_, 1);
  for (unsigned i = 0; i < k; ++i) p = p * *this;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  assert(o.vars_ == vars_);
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  assert(o.vars_ == vars_);
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  assert(a.vars_ == b.vars_);
  Polynomial p(a.vars_);
  Polynomial::Exponents e(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      p.addTerm(e, ca * cb);
    }
  return p;
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool constantTerm = true;
    for (auto k : e) constantTerm = constantTerm && k == 0;
    bool showCoeff = constantTerm || mag != 1;
    if (showCoeff) os << mag;
    bool needStar = showCoeff;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (needStar) os << '*';
      os << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      needStar = true;
    }
    first = false;
  }
  return os.str();
}

std::string linearFormToString(std::span<const Integer> alpha, const Integer& shift) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    Integer mag = abs(alpha[i]);
    os << (alpha[i] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1) os << mag << '*';
    os << 'x' << (i + 1);
    first = false;
  }
  if (shift != 0 || first) {
    Integer mag = abs(shift);
    os << (shift < 0 ? (first ? "-" : " - ") : (first ? "" : " + ")) << mag;
  }
  return os.str();
}

} // namespace zonotopal
