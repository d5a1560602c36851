#include "zonotopal/random_suite.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "zonotopal/analysis.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/filtration.hpp"
#include "zonotopal/ideals.hpp"
#include "zonotopal/text_format.hpp"
#include "zonotopal/tutte.hpp"

namespace zonotopal {

std::uint64_t drawBelow(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("empty range");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

DirectedGraph randomConnectedMultigraph(std::mt19937_64& rng, std::size_t maxEdges) {
  if (maxEdges == 0) throw InvalidArgument("a random graph needs at least one edge");
  const std::size_t edges = 1 + drawBelow(rng, maxEdges);
  // Between 2 and `edges` vertices: a spanning tree then leaves at least one
  // arrow closing a cycle, and a lone vertex would carry only self-loops.
  const std::size_t vertices = edges == 1 ? 1 : 2 + drawBelow(rng, edges - 1);

  std::vector<std::pair<std::size_t, std::size_t>> ends;
  for (std::size_t v = 1; v < vertices; ++v) ends.emplace_back(drawBelow(rng, v), v);
  while (ends.size() < edges) {
    // A self-loop empties the interior point set, so keep them to about one in eight.
    if (vertices == 1 || drawBelow(rng, 8) == 0) {
      const std::size_t v = drawBelow(rng, vertices);
      ends.emplace_back(v, v);
      continue;
    }
    const std::size_t u = drawBelow(rng, vertices);
    std::size_t v = drawBelow(rng, vertices - 1);
    if (v >= u) ++v;
    ends.emplace_back(u, v);
  }
  for (auto& [u, v] : ends)
    if (drawBelow(rng, 2) == 1) std::swap(u, v);

  std::vector<ArrowId> ids(edges);
  std::iota(ids.begin(), ids.end(), ArrowId{1});
  for (std::size_t i = edges; i > 1; --i) std::swap(ids[i - 1], ids[drawBelow(rng, i)]);

  DirectedGraph g;
  for (std::size_t v = 0; v < vertices; ++v) g.addVertex("v" + std::to_string(v));
  for (std::size_t e = 0; e < edges; ++e) g.addArrow(ids[e], ends[e].first, ends[e].second);
  return g;
}

InstanceCheck checkGraphInstance(const DirectedGraph& g) {
  InstanceCheck check;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) check.failures.push_back(what);
  };
  try {
    const auto ca = cographicalArrangement(g);
    const auto& va = ca.arrangement;
    const auto filtration = computeFiltration(va);
    check.pointCount = filtration.pointCount;

    const auto graphTutte = tuttePolynomial(g);
    const auto grDims = toIntegers(filtration.grDims);
    const auto su2 = su2PoincarePolynomial(g);
    expect(sameSeries(grDims, izHilbertSeries(va)), "graded dimensions differ from the Tutte Hilbert series");
    expect(sameSeries(grDims, su2), "graded dimensions differ from the SU(2) Poincare polynomial");
    Integer total = std::accumulate(grDims.begin(), grDims.end(), Integer(0));
    expect(total == Integer(static_cast<unsigned long>(filtration.pointCount)),
           "graded dimensions do not sum to the point count");
    expect(graphTutte.evaluate(1, 0) == Integer(static_cast<unsigned long>(filtration.pointCount)),
           "point count differs from T(1,0)");
    expect(tutteOfArrangement(va) == graphTutte.swapped(), "matroid Tutte polynomial is not T_G(y,x)");
    expect(verifySaturation(filtration), "a saturation index differs from 1");
    expect(dividedPowerGenerationCheck(filtration), "not generated in degree 1 as a divided powers ring");

    const auto generators = kMinusGenerators(va);
    expect(verifyVanishing(generators, filtration.points), "a K- generator does not vanish");
    expect(sameSeries(toIntegers(powerIdealQuotientDims(va)), grDims), "power ideal dimensions differ");

    const auto special = loopsAndColoops(va);
    for (std::size_t a = 0; a < va.size(); ++a) {
      if (std::count(special.loops.begin(), special.loops.end(), a) ||
          std::count(special.coloops.begin(), special.coloops.end(), a))
        continue;
      const auto dc = deletionContractionCheck(va, a);
      ++check.elementsChecked;
      check.exactnessVerified = true;
      expect(dc.inclusion && dc.bijection, "point bijection fails for element " + dc.element);
      for (const auto& d : dc.degrees) {
        const std::string where = " for element " + dc.element + " in degree " + std::to_string(d.degree);
        expect(d.dimensionIdentity, "dimension identity fails" + where);
        expect(d.xiInjective && d.partialSurjective && d.exactOverQ, "rational exactness fails" + where);
        expect(d.exactOverZ, "integral exactness fails" + where);
      }
    }
  } catch (const Error& e) {
    check.failures.push_back(std::string("exception: ") + e.what());
  }
  return check;
}

RandomSuiteSummary runRandomSuite(std::uint64_t seed, std::size_t count, std::size_t maxEdges) {
  if (maxEdges > kMaxRandomSuiteEdges)
    throw SizeExceeded("random suite supports at most " + std::to_string(kMaxRandomSuiteEdges) + " edges");
  RandomSuiteSummary s;
  s.seed = seed;
  s.count = count;
  s.maxEdges = maxEdges;
  if (count == 0) return s;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto g = randomConnectedMultigraph(rng, maxEdges);
    const auto check = checkGraphInstance(g);
    s.elementsChecked += check.elementsChecked;
    if (check.exactnessVerified) ++s.exactnessInstances;
    if (check.passed()) {
      ++s.passed;
      continue;
    }
    ++s.failed;
    if (!s.firstFailureIndex) {
      s.firstFailureIndex = i;
      s.firstFailureGraph = formatGraph(g);
      s.firstFailureReasons = check.failures;
    }
  }
  return s;
}

std::string renderText(const RandomSuiteSummary& s) {
  std::ostringstream os;
  os << "random suite: seed " << s.seed << ", " << s.count << " graphs with at most " << s.maxEdges << " edges\n";
  os << "  passed               " << s.passed << '\n';
  os << "  failed               " << s.failed << '\n';
  os << "  elements checked     " << s.elementsChecked << '\n';
  os << "  exactness instances  " << s.exactnessInstances << '\n';
  if (s.firstFailureIndex) {
    os << "first failure (instance " << *s.firstFailureIndex << "):\n";
    for (const auto& r : s.firstFailureReasons) os << "  - " << r << '\n';
    os << "replay with `izalg graph <file>` on:\n" << s.firstFailureGraph;
  }
  return os.str();
}

} // namespace zonotopal
