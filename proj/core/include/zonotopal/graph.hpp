#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zonotopal/arrangement.hpp"

namespace zonotopal {

using ArrowId = long;

struct Arrow {
  ArrowId id;
  std::size_t tail;
  std::size_t head;

  bool isSelfLoop() const { return tail == head; }
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Directed multigraph; self-loops and parallel arrows are allowed.
/// Arrows are kept sorted by id.
class DirectedGraph {
 public:
  std::size_t addVertex(std::string label);
  void addArrow(ArrowId id, std::string_view tail, std::string_view head);
  void addArrow(ArrowId id, std::size_t tail, std::size_t head);

  std::size_t vertexCount() const { return vertices_.size(); }
  const std::vector<std::string>& vertexLabels() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t arrowCount() const { return arrows_.size(); }

  /// Position of an arrow in arrows(); throws InvalidArgument if absent.
  std::size_t arrowIndex(ArrowId id) const;
  std::size_t vertexIndex(std::string_view label) const;
  bool hasVertex(std::string_view label) const;

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// |V| minus the number of connected components.
std::size_t graphRank(const DirectedGraph& g);
std::size_t connectedComponents(const DirectedGraph& g);

struct SignedArrow {
  ArrowId arrow;
  int sign;  // +1 traversed tail->head, -1 against its orientation
  friend bool operator==(const SignedArrow&, const SignedArrow&) = default;
};

/// A simple cycle in the underlying undirected multigraph, with a traversal
/// direction recorded per arrow.
struct OrientedCycle {
  std::vector<SignedArrow> cyclicOrder;

  std::size_t length() const { return cyclicOrder.size(); }
  std::vector<ArrowId> positiveArrows() const;  // C+
  std::vector<ArrowId> negativeArrows() const;  // C-
  OrientedCycle opposite() const;
  /// Coefficient of every arrow (in arrows() order) in the 1-cycle sum eps_i a_i.
  std::vector<Integer> edgeVector(const DirectedGraph& g) const;
  /// Consecutive incidence, distinct vertices, distinct arrows.
  bool isValidIn(const DirectedGraph& g) const;

  friend bool operator==(const OrientedCycle&, const OrientedCycle&) = default;
};

/// The cographical arrangement of g: lattice H^1(g; Z) coordinatized by a
/// basis of cycles, column of arrow a = coefficient of a in each basis cycle.
struct CographicalArrangement {
  VectorArrangement arrangement;
  std::vector<OrientedCycle> basis;
  std::vector<ArrowId> spanningForest;  // empty when the basis was supplied
};

/// Coordinates from fundamental cycles of the greedy spanning forest that
/// prefers smaller arrow ids; the j-th coordinate is the j-th non-forest arrow.
CographicalArrangement cographicalArrangement(const DirectedGraph& g);

/// Coordinates from caller-chosen cycles, which must form a Z-basis of H_1.
CographicalArrangement cographicalArrangement(const DirectedGraph& g, std::vector<OrientedCycle> basis);

/// All simple cycles, one per opposite pair: the representative traverses its
/// lowest-id arrow forwards and its cyclic order starts there.
std::vector<OrientedCycle> enumerateOrientedCycles(const DirectedGraph& g);

/// alpha_C expressed in the coordinates of the given cographical arrangement.
Covector cycleClass(const DirectedGraph& g, const CographicalArrangement& ca, const OrientedCycle& c);

/// Triple of cycle representatives with signs s_i such that the sum of
/// s_i * alpha_{C_i} is zero. Signs are normalized so at least two are +1.
struct ThetaSubgraph {
  std::array<std::size_t, 3> cycles;
  std::array<int, 3> signs;
};

std::vector<ThetaSubgraph> thetaSubgraphs(const DirectedGraph& g, std::span<const OrientedCycle> cycles);

} // namespace zonotopal
