#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "zonotopal/integer.hpp"

namespace zonotopal {

/// Sparse polynomial over Q in a fixed number of variables x1..xr.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(std::size_t variables = 0) : vars_(variables) {}

  static Polynomial constant(std::size_t variables, const Rational& c);
  static Polynomial variable(std::size_t variables, std::size_t index);
  /// <alpha, x> + shift.
  static Polynomial linear(std::span<const Integer> alpha, const Integer& shift = 0);
  /// binom(f, m) = f (f-1) ... (f-m+1) / m!.
  static Polynomial binomialOf(const Polynomial& f, unsigned m);

  std::size_t variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Exponents& e) const;

  /// Sum of the terms of top total degree.
  Polynomial leadingForm() const;
  Rational evaluate(std::span<const Integer> point) const;
  Polynomial pow(unsigned k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string toString() const;

 private:
  void addTerm(const Exponents& e, const Rational& c);

  std::size_t vars_;
  std::map<Exponents, Rational> terms_;
};

/// Renders <alpha, x> + shift as e.g. "x1 - x2 + 1".
std::string linearFormToString(std::span<const Integer> alpha, const Integer& shift = 0);

} // namespace zonotopal
