#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "zonotopal/arrangement.hpp"
#include "zonotopal/graph.hpp"
#include "zonotopal/linalg.hpp"
#include "zonotopal/random_suite.hpp"
#include "zonotopal/text_format.hpp"

namespace testing {

using namespace zonotopal;

inline std::string dataPath(const std::string& name) { return std::string(ZONOTOPAL_TEST_DATA) + "/" + name; }

inline DirectedGraph houseGraph() { return parseGraph(readTextFile(dataPath("house.graph"))); }

inline OrientedCycle cycleOf(std::vector<SignedArrow> arrows) { return OrientedCycle{std::move(arrows)}; }

// The house cycles in the orientation of the worked example.
inline OrientedCycle houseC3() { return cycleOf({{4, 1}, {5, 1}, {6, 1}}); }
inline OrientedCycle houseC4() { return cycleOf({{1, 1}, {2, 1}, {3, 1}, {4, 1}}); }
inline OrientedCycle houseC5() { return cycleOf({{1, 1}, {2, 1}, {3, 1}, {6, -1}, {5, -1}}); }

/// Cographical arrangement of the house in the coordinates (alpha_C4, alpha_C3).
inline VectorArrangement houseArrangement() {
  return cographicalArrangement(houseGraph(), {houseC4(), houseC3()}).arrangement;
}

/// k arrows around a k-cycle.
inline DirectedGraph cycleGraph(std::size_t k) {
  DirectedGraph g;
  for (std::size_t v = 0; v < k; ++v) g.addVertex("v" + std::to_string(v));
  for (std::size_t v = 0; v < k; ++v) g.addArrow(static_cast<ArrowId>(v + 1), v, (v + 1) % k);
  return g;
}

/// k copies of the vector (1) in Z^1.
inline VectorArrangement onesArrangement(std::size_t k, bool tu = true) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("a" + std::to_string(i + 1));
  return VectorArrangement(1, labels, IntMatrix(1, k, std::vector<Integer>(k, Integer(1))), tu);
}

inline std::vector<DirectedGraph> randomGraphs(std::uint64_t seed, std::size_t count, std::size_t maxEdges) {
  std::mt19937_64 rng(seed);
  std::vector<DirectedGraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(randomConnectedMultigraph(rng, maxEdges));
  return out;
}

inline IntMatrix randomMatrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = lo + static_cast<long>(drawBelow(rng, static_cast<std::uint64_t>(hi - lo + 1)));
  return m;
}

/// Random unimodular matrix: a product of elementary operations.
inline IntMatrix randomUnimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (int step = 0; step < 6; ++step) {
    std::size_t i = drawBelow(rng, n);
    std::size_t j = drawBelow(rng, n - 1);
    if (j >= i) ++j;
    long c = static_cast<long>(drawBelow(rng, 5)) - 2;
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

/// Determinant by permutation expansion; independent of the elimination code.
inline Integer leibnizDeterminant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer det = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    det += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// gcd of all k x k minors, the oracle for products of elementary divisors.
inline Integer minorGcd(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  for (const auto& rows : subsets(m.rows(), k))
    for (const auto& cols : subsets(m.cols(), k)) g = gcd(g, leibnizDeterminant(m.selectRows(rows).selectColumns(cols)));
  return g;
}

inline std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

inline std::vector<Integer> sizes(const std::vector<std::size_t>& v) {
  std::vector<Integer> out;
  for (auto x : v) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

}  // namespace testing
