#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "zonotopal/arrangement.hpp"
#include "zonotopal/graph.hpp"

namespace zonotopal {

/// Polynomial in x, y with integer coefficients; zero terms are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(const Integer& c);
  static BivariatePolynomial monomial(unsigned i, unsigned j, const Integer& c = 1);

  Integer coefficient(unsigned i, unsigned j) const;
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  unsigned degreeX() const;
  unsigned degreeY() const;

  Integer evaluate(const Integer& x, const Integer& y) const;
  /// T(y, x).
  BivariatePolynomial swapped() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  std::string toString() const;

 private:
  void addTerm(unsigned i, unsigned j, const Integer& c);
  std::map<Exponents, Integer> terms_;
};

std::ostream& operator<<(std::ostream& os, const BivariatePolynomial& p);

/// Tutte polynomial of the graph by memoized deletion-contraction.
BivariatePolynomial tuttePolynomial(const DirectedGraph& g);

/// Largest ground set accepted by tutteOfArrangement.
inline constexpr std::size_t kMaxSizeForSubsetExpansion = 20;

/// Tutte polynomial of the column matroid via the corank-nullity expansion.
/// Throws SizeExceeded above kMaxSizeForSubsetExpansion elements.
BivariatePolynomial tutteOfArrangement(const VectorArrangement& va);

/// Coefficients (constant term first) of t^rk(g) T_g(1/t, 0). Empty for the zero polynomial.
std::vector<Integer> su2PoincarePolynomial(const DirectedGraph& g);

} // namespace zonotopal
