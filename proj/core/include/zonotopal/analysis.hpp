#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zonotopal/arrangement.hpp"
#include "zonotopal/graph.hpp"
#include "zonotopal/tutte.hpp"

namespace zonotopal {

inline constexpr int kReportSchemaVersion = 1;

struct AnalysisOptions {
  /// Skip the brute-force unimodularity check for arrangement input.
  bool assumeTotallyUnimodular = false;
  /// Cap on the filtration degree; DegreeOverflow if it is not reached.
  std::optional<unsigned> maxDegree;
};

struct CocircuitRow {
  Covector covector;
  std::size_t dPlus = 0;
  std::size_t dMinus = 0;
  std::string generator;  // closed form of the binomial-shift generator
  friend bool operator==(const CocircuitRow&, const CocircuitRow&) = default;
};

struct DeletionContractionRow {
  std::string element;
  std::size_t points = 0;
  std::size_t deletionPoints = 0;
  std::size_t contractionPoints = 0;
  bool bijection = false;
  bool dimensionIdentity = false;
  bool exactOverQ = false;
  bool exactOverZ = false;

  bool ok() const { return bijection && dimensionIdentity && exactOverQ && exactOverZ; }
  friend bool operator==(const DeletionContractionRow&, const DeletionContractionRow&) = default;
};

/// Everything the pipeline computes for one input, in serialization order.
struct AnalysisReport {
  int schemaVersion = kReportSchemaVersion;
  std::string inputKind;  // "graph" or "arrangement"
  std::string input;      // canonical text of the input

  std::size_t rank = 0;
  std::size_t size = 0;
  bool totallyUnimodular = false;
  std::string unimodularitySource;  // "verified", "assumed" or "cographical"

  std::vector<CocircuitRow> cocircuits;
  LatticePointSet interiorPoints;
  /// Tutte polynomial of the arrangement's matroid (T_G(y, x) for a graph G).
  BivariatePolynomial tutte;
  std::vector<Integer> izHilbert;
  std::vector<std::size_t> qDims;
  std::vector<std::size_t> grDims;
  std::vector<Integer> saturationIndices;
  std::vector<std::size_t> powerIdealDims;
  std::vector<Integer> su2Poincare;  // graph input only

  bool saturation = false;
  bool dividedPowerGeneration = false;
  bool hilbertMatchesTutte = false;    // grDims == izHilbert
  bool pointCountMatchesTutte = false; // |Z-| == T(0, 1)
  bool generatorsVanish = false;
  bool powerIdealMatches = false;      // powerIdealDims == grDims, zero-padded
  std::vector<DeletionContractionRow> deletionContraction;
  /// Graph input only: grDims == izHilbert == su2Poincare.
  std::optional<bool> theoremIdentity;
  /// Graph input with at most kMaxSizeForSubsetExpansion arrows: matroid and graph Tutte agree.
  std::optional<bool> tutteDuality;

  bool allPass() const;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

AnalysisReport analyzeGraph(const DirectedGraph& g, const AnalysisOptions& options = {});
/// Throws NotTotallyUnimodular unless the input is TU or the option assumes it.
AnalysisReport analyzeArrangement(const VectorArrangement& va, const AnalysisOptions& options = {});

/// Aligned plain-text rendering.
std::string renderText(const AnalysisReport& report);

/// Equality after dropping trailing zeros.
bool sameSeries(const std::vector<Integer>& a, const std::vector<Integer>& b);
std::vector<Integer> toIntegers(const std::vector<std::size_t>& v);

} // namespace zonotopal
