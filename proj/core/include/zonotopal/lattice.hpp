#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zonotopal/matrix.hpp"

namespace zonotopal {

/// Column-style Hermite normal form of the lattice spanned by a matrix's columns.
///
/// `basis` has one column per lattice generator. Column j is zero above row
/// `pivotRows[j]`, its pivot entry is positive, pivot rows strictly increase,
/// and every entry of row `pivotRows[j]` to the left of the pivot lies in
/// [0, pivot). The form is unique, so two lattices are equal iff their bases are.
struct HermiteForm {
  IntMatrix basis;
  std::vector<std::size_t> pivotRows;
  std::vector<Integer> elementaryDivisors;

  std::size_t rank() const { return pivotRows.size(); }
  friend bool operator==(const HermiteForm&, const HermiteForm&) = default;
};

/// Largest dimension accepted by the Smith normal form routine.
inline constexpr std::size_t kSmithDimensionCap = 64;

/// Incrementally maintained HNF basis of a sublattice of Z^n.
class LatticeBuilder {
 public:
  explicit LatticeBuilder(std::size_t ambientDimension);

  void insert(std::span<const Integer> v);
  void insertColumns(const IntMatrix& generators);

  std::size_t ambientDimension() const { return ambient_; }
  std::size_t rank() const { return columns_.size(); }
  bool contains(std::span<const Integer> v) const;

  IntMatrix basis() const;
  std::vector<std::size_t> pivotRows() const { return pivots_; }

 private:
  void normalize();

  std::size_t ambient_;
  std::vector<std::vector<Integer>> columns_;
  std::vector<std::size_t> pivots_;
};

/// HNF basis only; no Smith form, so no size cap.
IntMatrix hermiteBasis(const IntMatrix& generators);

/// HNF together with the elementary divisors of the same lattice.
/// Throws SizeExceeded when the reduced basis exceeds kSmithDimensionCap.
HermiteForm hermiteNormalForm(const IntMatrix& generators);

/// Nonzero invariant factors of m, each dividing the next.
std::vector<Integer> elementaryDivisors(const IntMatrix& m);

/// Index of the column lattice inside its saturation in Z^ambientRank; 1 iff saturated.
Integer saturationIndex(const IntMatrix& sublattice, std::size_t ambientRank);

/// a * transform = hermite, transform unimodular. The first `rank` columns of
/// `hermite` are the HNF basis and the remaining columns are zero.
struct HermiteDecomposition {
  IntMatrix hermite;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivotRows;
};

HermiteDecomposition hermiteWithTransform(const IntMatrix& a);

/// HNF basis of {x in Z^n : a x = 0}.
IntMatrix integerKernel(const IntMatrix& a);

/// HNF basis of (Q-span of the columns) intersected with Z^n.
IntMatrix saturation(const IntMatrix& generators);

/// Some integer x with a x = b, if one exists.
std::optional<std::vector<Integer>> solveIntegral(const IntMatrix& a, std::span<const Integer> b);

} // namespace zonotopal
