#include <doctest.h>

#include <set>

#include "support.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/tutte.hpp"

using namespace testing;

namespace {

// Union-find component count; independent of graphRank.
std::size_t componentsOracle(const DirectedGraph& g) {
  std::vector<std::size_t> parent(g.vertexCount());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  std::size_t components = g.vertexCount();
  for (const auto& a : g.arrows()) {
    auto x = find(a.tail), y = find(a.head);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  return components;
}

DirectedGraph flipped(const DirectedGraph& g, std::uint64_t mask) {
  DirectedGraph out;
  for (const auto& v : g.vertexLabels()) out.addVertex(v);
  std::size_t k = 0;
  for (const auto& a : g.arrows()) {
    if ((mask >> k++) & 1)
      out.addArrow(a.id, a.head, a.tail);
    else
      out.addArrow(a.id, a.tail, a.head);
  }
  return out;
}

DirectedGraph relabeled(const DirectedGraph& g, std::mt19937_64& rng) {
  std::vector<ArrowId> ids(g.arrowCount());
  std::iota(ids.begin(), ids.end(), ArrowId{100});
  for (std::size_t i = ids.size(); i > 1; --i) std::swap(ids[i - 1], ids[drawBelow(rng, i)]);
  DirectedGraph out;
  for (const auto& v : g.vertexLabels()) out.addVertex(v);
  for (std::size_t k = 0; k < g.arrowCount(); ++k) out.addArrow(ids[k], g.arrows()[k].tail, g.arrows()[k].head);
  return out;
}

}  // namespace

TEST_CASE("house graph shape") {
  const auto g = houseGraph();
  CHECK(g.vertexCount() == 5);
  CHECK(g.arrowCount() == 6);
  CHECK(graphRank(g) == 4);
  CHECK(connectedComponents(g) == 1);
  CHECK(g.arrows()[0] == Arrow{1, g.vertexIndex("c"), g.vertexIndex("b")});
}

TEST_CASE("house has exactly the three cycles C3, C4, C5") {
  const auto g = houseGraph();
  const auto cycles = enumerateOrientedCycles(g);
  REQUIRE(cycles.size() == 3);
  for (const auto& c : {houseC3(), houseC4(), houseC5()}) {
    CHECK(c.isValidIn(g));
    CHECK(std::count(cycles.begin(), cycles.end(), c) == 1);
  }
  CHECK(houseC5().positiveArrows() == std::vector<ArrowId>{1, 2, 3});
  CHECK(houseC5().negativeArrows() == std::vector<ArrowId>{5, 6});
  CHECK(houseC5().opposite().positiveArrows() == std::vector<ArrowId>{5, 6});
}

TEST_CASE("house theta relation") {
  const auto g = houseGraph();
  const auto cycles = enumerateOrientedCycles(g);
  const auto thetas = thetaSubgraphs(g, cycles);
  REQUIRE(thetas.size() == 1);
  const auto& t = thetas[0];
  std::vector<Integer> sum(g.arrowCount(), Integer(0));
  int positives = 0;
  for (int k = 0; k < 3; ++k) {
    positives += t.signs[k] > 0;
    const auto v = cycles[t.cycles[k]].edgeVector(g);
    for (std::size_t a = 0; a < v.size(); ++a) sum[a] += t.signs[k] * v[a];
  }
  CHECK(positives >= 2);
  CHECK(std::all_of(sum.begin(), sum.end(), [](const Integer& x) { return x == 0; }));
}

TEST_CASE("explicit cycle basis reproduces the worked coordinates") {
  const auto g = houseGraph();
  const auto ca = cographicalArrangement(g, {houseC4(), houseC3()});
  CHECK(ca.arrangement.columns() == IntMatrix(2, 6, ints({1, 1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1})));
  CHECK(ca.arrangement.labels() == std::vector<std::string>{"1", "2", "3", "4", "5", "6"});
  CHECK(ca.arrangement.markedTotallyUnimodular());
  CHECK(cycleClass(g, ca, houseC4()) == ints({1, 0}));
  CHECK(cycleClass(g, ca, houseC3()) == ints({0, 1}));
  CHECK(cycleClass(g, ca, houseC5()) == ints({1, -1}));
}

TEST_CASE("invalid cycle bases are rejected") {
  const auto g = houseGraph();
  CHECK_THROWS_AS(cographicalArrangement(g, {houseC4()}), InvalidArgument);
  CHECK_THROWS_AS(cographicalArrangement(g, {houseC4(), houseC4()}), InvalidArgument);
  CHECK_THROWS_AS(cographicalArrangement(g, {houseC4(), cycleOf({{1, 1}, {2, 1}})}), InvalidArgument);
}

TEST_CASE("default coordinates differ from the worked ones only by a basis change") {
  const auto g = houseGraph();
  const auto def = cographicalArrangement(g);
  CHECK(def.spanningForest.size() == 4);
  CHECK(def.basis.size() == 2);
  const auto points = interiorLatticePoints(def.arrangement);
  CHECK(points.size() == 6);
  // Both coordinate systems see the same cocircuit sizes.
  std::multiset<std::size_t> a, b;
  for (const auto& c : enumerateCocircuits(def.arrangement)) a.insert(c.d());
  for (const auto& c : enumerateCocircuits(houseArrangement())) b.insert(c.d());
  CHECK(a == b);
}

TEST_CASE("graph rank agrees with a union-find count on random graphs") {
  for (const auto& g : randomGraphs(7, 50, 9)) {
    CHECK(connectedComponents(g) == componentsOracle(g));
    CHECK(graphRank(g) == g.vertexCount() - componentsOracle(g));
    const auto ca = cographicalArrangement(g);
    CHECK(ca.arrangement.rank() == g.arrowCount() - graphRank(g));
    CHECK(ca.arrangement.size() == g.arrowCount());
  }
}

TEST_CASE("cycle edge vectors lie in the cycle space") {
  for (const auto& g : randomGraphs(8, 30, 7)) {
    IntMatrix incidence(g.vertexCount(), g.arrowCount());
    for (std::size_t k = 0; k < g.arrowCount(); ++k) {
      incidence(g.arrows()[k].tail, k) -= 1;
      incidence(g.arrows()[k].head, k) += 1;
    }
    for (const auto& c : enumerateOrientedCycles(g)) {
      CHECK(c.isValidIn(g));
      const auto v = c.edgeVector(g);
      const auto boundary = incidence * std::span<const Integer>(v);
      CHECK(std::all_of(boundary.begin(), boundary.end(), [](const Integer& x) { return x == 0; }));
    }
  }
}

TEST_CASE("graph text round trip") {
  const auto g = houseGraph();
  CHECK(parseGraph(formatGraph(g)) == g);
  for (const auto& r : randomGraphs(9, 20, 7)) CHECK(parseGraph(formatGraph(r)) == r);
}

TEST_CASE("graph parse errors carry positions") {
  CHECK_THROWS_AS(parseGraph("vertex a\narrow 1 a b\n"), ParseError);
  try {
    parseGraph("vertex a\nvertex b\nedge 1 a b\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 1);
  }
  CHECK_THROWS_AS(parseGraph("vertex a\nvertex a\n"), ParseError);
  CHECK_THROWS_AS(parseGraph("vertex a\narrow x a a\n"), ParseError);
  CHECK_THROWS_AS(parseGraph("vertex a\narrow 1 a a\narrow 1 a a\n"), ParseError);
  CHECK_THROWS_AS(parseGraph("vertex a\narrow 1 a\n"), ParseError);
  CHECK(parseGraph("# only a comment\n\nvertex a # trailing\n").vertexCount() == 1);
}

TEST_CASE("orientation flips and id relabeling preserve the invariants") {
  std::mt19937_64 rng(10);
  for (const auto& g : randomGraphs(11, 25, 7)) {
    const auto base = cographicalArrangement(g).arrangement;
    const auto points = interiorLatticePoints(base).size();
    const auto tutte = tuttePolynomial(g);
    const auto f = flipped(g, rng());
    const auto rl = relabeled(g, rng);
    for (const auto& h : {f, rl}) {
      const auto va = cographicalArrangement(h).arrangement;
      CHECK(interiorLatticePoints(va).size() == points);
      CHECK(tuttePolynomial(h) == tutte);
      CHECK(enumerateCocircuits(va).size() == enumerateCocircuits(base).size());
    }
  }
}

TEST_CASE("a tree gives the rank-zero arrangement and bridges are loops") {
  DirectedGraph tree;
  for (const char* v : {"a", "b", "c", "d"}) tree.addVertex(v);
  tree.addArrow(1, "a", "b");
  tree.addArrow(2, "b", "c");
  tree.addArrow(3, "b", "d");
  const auto va = cographicalArrangement(tree).arrangement;
  CHECK(va.rank() == 0);
  CHECK(va.size() == 3);
  CHECK(loopsAndColoops(va).loops == std::vector<std::size_t>{0, 1, 2});
  CHECK(interiorLatticePoints(va) == LatticePointSet{LatticePoint{}});

  // A self-loop of the graph is a coloop of its arrangement.
  const auto loop = cographicalArrangement(parseGraph(readTextFile(dataPath("selfloop.graph")))).arrangement;
  CHECK(loopsAndColoops(loop).coloops.size() == 1);
  CHECK(interiorLatticePoints(loop).empty());
}
