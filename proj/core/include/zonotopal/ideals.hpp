#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zonotopal/arrangement.hpp"
#include "zonotopal/polynomial.hpp"

namespace zonotopal {

/// Largest dim Sym^d handled by the truncated-degree linear algebra.
inline constexpr std::size_t kMaxSymmetricPowerDimension = 3000;

/// binomialShift: binom(alpha + d- - 1, d - 1), a generator of K-(chi).
/// purePower: alpha^(d-1) / (d-1)!, a generator of I-(chi).
struct IdealGenerator {
  enum class Kind { binomialShift, purePower };

  Kind kind = Kind::binomialShift;
  Cocircuit cocircuit;
  unsigned degree = 0;  // d(alpha) - 1
  std::string closedForm;

  /// d- - 1 for binomialShift, 0 for purePower.
  Integer shift() const;
  Polynomial polynomial() const;
  Integer evaluate(std::span<const Integer> z) const;
};

std::vector<IdealGenerator> kMinusGenerators(const VectorArrangement& va);
std::vector<IdealGenerator> kMinusGenerators(std::span<const Cocircuit> cocircuits);
std::vector<IdealGenerator> iMinusGenerators(const VectorArrangement& va);
std::vector<IdealGenerator> iMinusGenerators(std::span<const Cocircuit> cocircuits);

/// True iff every binomialShift generator vanishes at every point.
bool verifyVanishing(std::span<const IdealGenerator> generators, const LatticePointSet& points);

/// dim Sym^d / (ideal generated by alpha^(d(alpha)-1))_d for d = 0..maxDegree.
/// The default bound is |A| - r + 1, one past the largest possible top degree.
/// Throws SizeExceeded when dim Sym^d exceeds kMaxSymmetricPowerDimension.
std::vector<std::size_t> powerIdealQuotientDims(const VectorArrangement& va,
                                                std::optional<unsigned> maxDegree = std::nullopt);

/// Indices of generators lying in the ideal of the others, tested in degrees
/// <= the generator's own degree (all of them homogeneous for purePower).
/// Truncation makes this a sufficient test only: an index missing from the
/// result may still be redundant through higher-degree cancellation.
std::vector<std::size_t> redundantGenerators(std::span<const IdealGenerator> generators, std::size_t latticeRank);

} // namespace zonotopal
