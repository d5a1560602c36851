#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zonotopal/matrix.hpp"

namespace zonotopal {

using Covector = std::vector<Integer>;
using LatticePoint = std::vector<Integer>;
/// Finite set of lattice points, kept in lexicographic order.
using LatticePointSet = std::vector<LatticePoint>;

/// A labeled family of vectors chi: A -> Z^r whose columns span Q^r.
///
/// The totally-unimodular mark records that every subfamily spans a saturated
/// sublattice. It is set by verification, by construction (cographical
/// arrangements), or by explicit assumption, and is inherited by minors.
class VectorArrangement {
 public:
  VectorArrangement(std::size_t latticeRank, std::vector<std::string> labels, IntMatrix columns,
                    bool totallyUnimodular = false);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t element) const { return labels_.at(element); }
  const IntMatrix& columns() const { return columns_; }
  std::vector<Integer> vector(std::size_t element) const { return columns_.column(element); }

  /// Throws InvalidArgument for an unknown label.
  std::size_t indexOf(std::string_view label) const;

  bool markedTotallyUnimodular() const { return totallyUnimodular_; }
  VectorArrangement markedAsTotallyUnimodular() const;

  friend bool operator==(const VectorArrangement&, const VectorArrangement&) = default;

 private:
  std::size_t rank_;
  std::vector<std::string> labels_;
  IntMatrix columns_;
  bool totallyUnimodular_;
};

/// Brute-force caps for the subdeterminant test.
inline constexpr std::size_t kMaxRankForUnimodularityCheck = 6;
inline constexpr std::size_t kMaxSizeForUnimodularityCheck = 12;

struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Integer determinant;
};

/// First square minor (by size, then row/column combination order) whose
/// determinant lies outside {-1,0,1}. Throws SizeExceeded beyond the caps.
std::optional<Minor> findNonUnimodularMinor(const VectorArrangement& va);
bool isTotallyUnimodular(const VectorArrangement& va);

/// Returns va marked totally unimodular, verifying it first unless already
/// marked. Throws NotTotallyUnimodular (with the offending minor) or SizeExceeded.
VectorArrangement requireTotallyUnimodular(const VectorArrangement& va);

struct LoopsAndColoops {
  std::vector<std::size_t> loops;
  std::vector<std::size_t> coloops;
};

LoopsAndColoops loopsAndColoops(const VectorArrangement& va);
bool isLoop(const VectorArrangement& va, std::size_t element);
bool isColoop(const VectorArrangement& va, std::size_t element);

/// Same lattice, element removed. Throws IsColoop.
VectorArrangement deletion(const VectorArrangement& va, std::size_t element);
VectorArrangement deletion(const VectorArrangement& va, std::string_view label);

/// Contraction together with the quotient map Z^r -> Z^r / Z chi(a) ~= Z^(r-1).
struct Contraction {
  VectorArrangement arrangement;
  IntMatrix projection;  // (r-1) x r, surjective onto Z^(r-1)

  LatticePoint project(std::span<const Integer> z) const;
};

/// Throws IsLoop, or NotTotallyUnimodular if chi(a) is not primitive.
Contraction contractionWithProjection(const VectorArrangement& va, std::size_t element);
VectorArrangement contraction(const VectorArrangement& va, std::size_t element);
VectorArrangement contraction(const VectorArrangement& va, std::string_view label);

struct Cocircuit {
  Covector covector;        // primitive, first nonzero entry positive
  std::vector<int> values;  // <alpha, chi(a)> for every element a
  std::size_t dPlus = 0;
  std::size_t dMinus = 0;
  std::vector<std::size_t> support;

  std::size_t d() const { return dPlus + dMinus; }
  /// The negated covector with d+ and d- exchanged.
  Cocircuit opposite() const;

  friend bool operator==(const Cocircuit&, const Cocircuit&) = default;
};

/// All cocircuits up to sign, sorted lexicographically by covector.
/// Cost is O(C(|A|, r-1)) rank computations.
std::vector<Cocircuit> enumerateCocircuits(const VectorArrangement& va);

/// Lattice points strictly inside the zonotope, lexicographically ordered.
/// Empty when a coloop exists; the single empty point when r = 0.
LatticePointSet interiorLatticePoints(const VectorArrangement& va);
LatticePointSet interiorLatticePoints(const VectorArrangement& va, std::span<const Cocircuit> cocircuits);

/// The covector alpha with <alpha, chi(a)> = values[a] for all a, if it exists and is integral.
std::optional<Covector> covectorWithValues(const VectorArrangement& va, std::span<const Integer> values);

Integer pairing(std::span<const Integer> alpha, std::span<const Integer> z);

} // namespace zonotopal
