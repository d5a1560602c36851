#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zonotopal/matrix.hpp"

namespace zonotopal {

/// Rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);
/// Rows are cleared of denominators first, then Bareiss.
std::size_t rank(const RatMatrix& m);

Integer determinant(const IntMatrix& square);

/// Basis of the right kernel, one vector per column. A matrix with zero
/// columns (and m.cols() rows) is returned when the kernel is trivial.
RatMatrix kernelBasis(const RatMatrix& m);

/// Some x with m x = b over Q, if any exists.
std::optional<std::vector<Rational>> solveRational(const RatMatrix& m, std::span<const Rational> b);

/// Incrementally grown echelon basis of a subspace of Q^n.
class RationalEchelon {
 public:
  /// Returns false (and leaves the basis unchanged) if v is already in the span.
  bool insert(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::vector<Rational>& v) const;

  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

/// True iff v lies in the Q-span of the columns of m.
bool inColumnSpan(const IntMatrix& m, std::span<const Integer> v);

} // namespace zonotopal
