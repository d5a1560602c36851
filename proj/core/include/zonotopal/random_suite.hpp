#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zonotopal/graph.hpp"

namespace zonotopal {

inline constexpr std::size_t kMaxRandomSuiteEdges = 9;

/// Uniform draw from [0, bound). Written out by hand because the standard
/// distributions are not reproducible across library implementations.
std::uint64_t drawBelow(std::mt19937_64& rng, std::uint64_t bound);

/// Connected directed multigraph with m in 1..maxEdges arrows on 2..m
/// vertices (one vertex when m = 1), so its cycle space is nonzero. Self-loops and
/// parallel arrows occur. Arrow ids are a random permutation of 1..m.
DirectedGraph randomConnectedMultigraph(std::mt19937_64& rng, std::size_t maxEdges);

/// Cross-checks run on one graph; every failed check adds a line to `failures`.
struct InstanceCheck {
  std::size_t pointCount = 0;
  std::size_t elementsChecked = 0;  // non-loop, non-coloop elements
  bool exactnessVerified = false;   // xi/d exactness ran on at least one element
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

InstanceCheck checkGraphInstance(const DirectedGraph& g);

struct RandomSuiteSummary {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::size_t maxEdges = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t elementsChecked = 0;
  std::size_t exactnessInstances = 0;
  std::optional<std::size_t> firstFailureIndex;
  std::string firstFailureGraph;  // graph text, replayable with the graph command
  std::vector<std::string> firstFailureReasons;

  friend bool operator==(const RandomSuiteSummary&, const RandomSuiteSummary&) = default;
};

/// Throws SizeExceeded when maxEdges > kMaxRandomSuiteEdges.
RandomSuiteSummary runRandomSuite(std::uint64_t seed, std::size_t count, std::size_t maxEdges);

std::string renderText(const RandomSuiteSummary& summary);

} // namespace zonotopal
