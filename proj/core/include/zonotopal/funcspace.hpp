#pragma once

#include <span>
#include <vector>

#include "zonotopal/arrangement.hpp"
#include "zonotopal/matrix.hpp"
#include "zonotopal/polynomial.hpp"

namespace zonotopal {

/// x1^e1 ... xr^er.
struct Monomial {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  Integer evaluate(std::span<const Integer> z) const;
  Polynomial polynomial() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// binom(x1, i1) ... binom(xr, ir); integer valued on Z^r.
struct BinomialProduct {
  std::vector<unsigned> perCoordinate;

  unsigned degree() const;
  Integer evaluate(std::span<const Integer> z) const;
  Polynomial polynomial() const;
  friend bool operator==(const BinomialProduct&, const BinomialProduct&) = default;
};

/// Exponent vectors of total degree exactly d, lexicographically descending
/// (x1^d first).
std::vector<std::vector<unsigned>> exponentsOfDegree(std::size_t r, unsigned d);

/// Graded-lexicographic: by degree, then as in exponentsOfDegree.
std::vector<Monomial> monomialsUpTo(std::size_t r, unsigned d);
std::vector<Monomial> monomialsOfDegree(std::size_t r, unsigned d);
std::vector<BinomialProduct> binomialProductsUpTo(std::size_t r, unsigned d);

/// Rows are functions, columns are points; entry (f, z) = f(z).
template <class Function>
struct EvaluationMatrix {
  std::vector<Function> functions;
  LatticePointSet points;
  IntMatrix values;
};

/// Throws EmptyPointSet when points is empty.
EvaluationMatrix<Monomial> evaluate(std::span<const Monomial> basis, const LatticePointSet& points);
EvaluationMatrix<BinomialProduct> evaluate(std::span<const BinomialProduct> basis, const LatticePointSet& points);

/// Values of binom(<alpha, z> + shift, m) at each point.
std::vector<Integer> evaluateShiftedBinomial(std::span<const Integer> alpha, const Integer& shift, unsigned m,
                                             const LatticePointSet& points);

} // namespace zonotopal
