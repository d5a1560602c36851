#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zonotopal/arrangement.hpp"
#include "zonotopal/lattice.hpp"
#include "zonotopal/tutte.hpp"

namespace zonotopal {

/// Upper bound on |interior points| accepted by the filtration machinery.
inline constexpr std::size_t kMaxPointCount = 512;

/// Degree filtration of functions on a finite point set P in Z^r.
///
/// R_i(Q) is the image of polynomials of degree <= i, R~_i(Z) the image of
/// integer-valued polynomials of degree <= i (spanned by binomial products),
/// and R_i(Z) = R_i(Q) cap Z^P. Index i of every per-degree vector runs over
/// 0..topDegree; beyond topDegree all pieces equal the full function space.
/// An empty point set gives pointCount 0 and empty per-degree data.
struct FiltrationReport {
  std::size_t latticeRank = 0;
  LatticePointSet points;
  std::size_t pointCount = 0;
  std::vector<std::size_t> qDims;
  std::vector<std::size_t> grDims;
  /// HNF of R~_i(Z) in Z^P. Elementary divisors are filled only when
  /// pointCount <= kSmithDimensionCap.
  std::vector<HermiteForm> zLatticeBases;
  /// HNF basis of R_i(Z), the saturation of R~_i(Z).
  std::vector<IntMatrix> integralBases;
  /// [R_i(Z) : R~_i(Z)].
  std::vector<Integer> saturationIndices;
  unsigned topDegree = 0;

  bool empty() const { return pointCount == 0; }
  /// dim R_i(Q), extended by 0 below degree 0 and by pointCount above topDegree.
  std::size_t qDim(long degree) const;
  /// Basis of R_i(Z) with the same extension (zero columns for negative degree).
  IntMatrix integralBasis(long degree) const;
};

/// Filtration of an arbitrary finite point set. Throws DegreeOverflow when
/// R_maxDegree is still a proper subspace, SizeExceeded above kMaxPointCount.
FiltrationReport filtrationOfPoints(const LatticePointSet& points, std::size_t latticeRank,
                                    std::optional<unsigned> maxDegree = std::nullopt);

/// Filtration of the interior points of a totally unimodular arrangement.
/// Throws NotTotallyUnimodular.
FiltrationReport computeFiltration(const VectorArrangement& va, std::optional<unsigned> maxDegree = std::nullopt);

/// True iff every saturation index is 1 (vacuously true for empty point sets).
bool verifySaturation(const FiltrationReport& report);
bool verifySaturation(const VectorArrangement& va);

/// Coefficients of t^(|A|-r) T(0, 1/t), constant term first, trailing zeros dropped.
std::vector<Integer> izHilbertSeries(const VectorArrangement& va);
/// Same series from an already known Tutte polynomial of a matroid with the given size and rank.
std::vector<Integer> izHilbertSeries(const BivariatePolynomial& tutte, std::size_t size, std::size_t rank);

/// An element of gr_i = R_i(Z) / R_(i-1)(Z), carried by a lift in R_i(Z).
struct GradedClass {
  unsigned degree = 0;
  /// Coefficients over binomialProductsUpTo(r, degree); integral whenever
  /// R~_degree(Z) is saturated.
  std::vector<Rational> representative;
  /// The lift evaluated on the points.
  std::vector<Integer> values;
  /// Coordinates of the image in gr_degree, which is free of rank grDims[degree].
  std::vector<Integer> residue;

  bool isZero() const;
};

/// Class of the function with the given values, viewed in filtration degree
/// `degree`. Throws InvalidArgument if the function does not lie in R_degree(Q).
GradedClass classOf(const FiltrationReport& report, unsigned degree, std::vector<Integer> values);

/// Degree-1 class of the coordinate function z -> z_j.
GradedClass coordinateClass(const FiltrationReport& report, std::size_t j);

/// Product in gr; the zero class of degree a.degree + b.degree past topDegree.
GradedClass multiply(const FiltrationReport& report, const GradedClass& a, const GradedClass& b);

/// e^[m]: the class of z -> binom(e(z), m) in degree m * e.degree.
/// Throws DegreeOverflow when m * degree > topDegree, InvalidArgument for a
/// degree-0 class with m > 1, NotIntegral if the result leaves R_(m i)(Z).
GradedClass dividedPower(const FiltrationReport& report, const GradedClass& e, unsigned m);

/// m! e^[m] - e^m lies in R_(m i - 1)(Q).
bool dividedPowerLawHolds(const FiltrationReport& report, const GradedClass& e, unsigned m);

/// True iff target lies in the Z-span of the degree-matching products of the generators.
bool inSubringGeneratedBy(const FiltrationReport& report, std::span<const GradedClass> generators,
                          const GradedClass& target);

/// Compares, for every degree i, the lattice spanned by products
/// prod_k binom(eta_k, m_k) with sum m_k <= i against R~_i(Z), where eta runs
/// over the HNF basis of R_1(Z).
bool dividedPowerGenerationCheck(const FiltrationReport& report);

struct DegreeExactness {
  long degree = 0;
  std::size_t dim = 0;             // dim R_i(chi; Q)
  std::size_t contractionDim = 0;  // dim R_i(chi''; Q)
  std::size_t deletionDim = 0;     // dim R_(i-1)(chi'; Q)
  bool dimensionIdentity = false;
  bool xiInjective = false;
  bool partialSurjective = false;
  bool exactOverQ = false;
  bool exactOverZ = false;

  bool ok() const { return dimensionIdentity && xiInjective && partialSurjective && exactOverQ && exactOverZ; }
};

struct DeletionContractionCheck {
  std::string element;
  std::size_t pointCount = 0;
  std::size_t deletionPointCount = 0;
  std::size_t contractionPointCount = 0;
  /// Z(chi') is contained in Z(chi) and z + chi(a) stays in Z(chi) for z in Z(chi').
  bool inclusion = false;
  /// z -> zbar maps Z(chi) \ Z(chi') bijectively onto Z(chi'') and Z(chi) into Z(chi'').
  bool bijection = false;
  std::vector<DegreeExactness> degrees;

  bool ok() const;
};

/// Throws LoopOrColoop.
DeletionContractionCheck deletionContractionCheck(const VectorArrangement& va, std::size_t element);
DeletionContractionCheck deletionContractionCheck(const VectorArrangement& va, std::string_view label);

/// One summand u^i R_i(Z) of the Rees algebra. The filtration weight is i; in
/// the cohomological grading u has degree 2, recorded as topologicalDegree.
struct ReesPiece {
  unsigned weight = 0;
  unsigned topologicalDegree = 0;
  IntMatrix basis;
  std::size_t rank() const { return basis.cols(); }
};

std::vector<ReesPiece> reesData(const FiltrationReport& report);

} // namespace zonotopal
