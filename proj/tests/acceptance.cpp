// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "support.hpp"
#include "zonotopal/analysis.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/filtration.hpp"
#include "zonotopal/ideals.hpp"
#include "zonotopal/report_json.hpp"
#include "zonotopal/tutte.hpp"

using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

// Every arrangement seen by criteria 1-3, reused by 4-6.
struct Instance {
  std::string name;
  VectorArrangement arrangement;
  FiltrationReport filtration;
};

std::vector<Instance> instances;

Instance& record(std::string name, const VectorArrangement& va) {
  instances.push_back({std::move(name), va, computeFiltration(va)});
  return instances.back();
}

bool sameMultiset(std::vector<std::pair<std::size_t, std::size_t>> a,
                  std::vector<std::pair<std::size_t, std::size_t>> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void criterionHouse(Outcome& o) {
  const auto start = Clock::now();
  const auto report = analyzeGraph(houseGraph());
  const auto va = houseArrangement();
  const auto& inst = record("house", va);
  const double elapsed = secondsSince(start);

  LatticePointSet expected;
  for (long a = 1; a <= 3; ++a)
    for (long b = 1; b <= 2; ++b) expected.push_back(ints({a, b}));
  o.require(interiorLatticePoints(va) == expected, "interior points are not {1,2,3}x{1,2}");
  o.require(report.interiorPoints.size() == 6, "graph route does not find 6 points");

  std::vector<std::pair<std::size_t, std::size_t>> signs, reported;
  for (const auto& c : enumerateCocircuits(va)) signs.emplace_back(c.dPlus, c.dMinus);
  for (const auto& c : report.cocircuits) reported.emplace_back(std::max(c.dPlus, c.dMinus), std::min(c.dPlus, c.dMinus));
  o.require(sameMultiset(signs, {{3, 0}, {4, 0}, {3, 2}}), "cocircuit data differs");
  o.require(sameMultiset(reported, {{3, 0}, {4, 0}, {3, 2}}), "graph route cocircuit data differs");

  for (const auto* f : {&inst.filtration}) {
    o.require(f->qDims == std::vector<std::size_t>{1, 3, 5, 6}, "qDims differ from [1,3,5,6]");
    o.require(f->grDims == std::vector<std::size_t>{1, 2, 2, 1}, "grDims differ from [1,2,2,1]");
    o.require(f->saturationIndices == ints({1, 1, 1, 1}), "a saturation index differs from 1");
  }
  o.require(report.qDims == std::vector<std::size_t>{1, 3, 5, 6}, "graph route qDims differ");
  o.require(report.grDims == std::vector<std::size_t>{1, 2, 2, 1}, "graph route grDims differ");
  o.require(report.allPass(), "graph route verdicts fail");
  o.require(elapsed < 1.0, "runtime not below 1 s");
  o.detail << "grDims [1,2,2,1], 6 points, " << elapsed << " s";
}

void criterionCycles(Outcome& o) {
  for (std::size_t k = 2; k <= 8; ++k) {
    const std::string name = "cycle " + std::to_string(k);
    const auto& inst = record(name, cographicalArrangement(cycleGraph(k)).arrangement);
    const auto& f = inst.filtration;
    LatticePointSet expected;
    for (long x = 1; x < static_cast<long>(k); ++x) expected.push_back(ints({x}));
    o.require(f.points == expected, name + ": points are not {1..k-1}");
    o.require(f.grDims == std::vector<std::size_t>(k - 1, 1), name + ": grDims are not all ones");
    const auto e = coordinateClass(f, 0);
    for (unsigned m = 0; m + 2 <= k; ++m) {
      o.require(dividedPowerLawHolds(f, e, m), name + ": divided power law fails for m = " + std::to_string(m));
      if (m >= 1) o.require(!dividedPower(f, e, m).isZero(), name + ": e^[m] vanishes");
    }
    if (k >= 4) {
      const std::vector<GradedClass> gens{e};
      o.require(!inSubringGeneratedBy(f, gens, dividedPower(f, e, 2)), name + ": e^[2] lies in Z[e]");
    }
  }
  o.detail << "k = 2..8, law for m <= k-2, e^[2] outside Z[e] for k >= 4";
}

std::size_t randomInstances = 0;

void criterionTutte(Outcome& o) {
  const auto start = Clock::now();
  const auto graphs = randomGraphs(1, 100, 7);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    const std::string name = "random " + std::to_string(i);
    const auto& inst = record(name, cographicalArrangement(g).arrangement);
    const auto t = tuttePolynomial(g);
    const auto gr = toIntegers(inst.filtration.grDims);
    const auto su2 = su2PoincarePolynomial(g);
    // Coefficients of t^rk T(1/t, 0) read off directly from the graph Tutte polynomial.
    std::vector<Integer> expected(graphRank(g) + 1, Integer(0));
    for (const auto& [ex, c] : t.terms())
      if (ex.second == 0) expected[graphRank(g) - ex.first] += c;
    o.require(sameSeries(gr, expected), name + ": grDims differ from t^rk T(1/t, 0)");
    o.require(sameSeries(gr, su2), name + ": grDims differ from the SU(2) polynomial");
    Integer total = std::accumulate(gr.begin(), gr.end(), Integer(0));
    o.require(total == Integer(static_cast<unsigned long>(inst.filtration.pointCount)), name + ": sum differs from |Z-|");
    o.require(total == t.evaluate(1, 0), name + ": sum differs from T(1,0)");
    ++randomInstances;
  }
  const auto summary = runRandomSuite(1, 100, 7);
  o.require(summary.passed == 100, "random suite reports failures");
  const double elapsed = secondsSince(start);
  o.require(elapsed < 60.0, "suite runtime not below 60 s");
  o.detail << randomInstances << " graphs with <= 7 edges, " << elapsed << " s";
}

void criterionDeletionContraction(Outcome& o) {
  std::size_t elements = 0, exactInstances = 0;
  for (const auto& inst : instances) {
    const auto& va = inst.arrangement;
    bool exact = false;
    for (std::size_t a = 0; a < va.size(); ++a) {
      if (isLoop(va, a) || isColoop(va, a)) continue;
      const auto dc = deletionContractionCheck(va, a);
      const std::string where = inst.name + ", element " + dc.element;
      o.require(dc.inclusion && dc.bijection, where + ": point bijection fails");
      o.require(dc.pointCount == dc.deletionPointCount + dc.contractionPointCount, where + ": point counts");
      for (const auto& d : dc.degrees) {
        o.require(d.dimensionIdentity && d.dim == d.contractionDim + d.deletionDim,
                  where + ": dimension identity in degree " + std::to_string(d.degree));
        o.require(d.xiInjective && d.partialSurjective && d.exactOverQ && d.exactOverZ,
                  where + ": exactness in degree " + std::to_string(d.degree));
      }
      exact = exact || !dc.degrees.empty();
      ++elements;
    }
    exactInstances += exact;
  }
  o.require(exactInstances >= 20, "exactness verified on fewer than 20 instances");
  o.detail << elements << " elements, exactness on " << exactInstances << " instances";
}

void criterionSaturation(Outcome& o) {
  for (const auto& inst : instances)
    o.require(verifySaturation(inst.filtration), inst.name + ": saturation index differs from 1");
  LatticePointSet nonExample{ints({0}), ints({2})};
  const auto f = filtrationOfPoints(nonExample, 1);
  o.require(f.saturationIndices == ints({1, 2}), "{0,2} does not give index 2");
  o.detail << instances.size() << " instances saturated, {0,2} index " << f.saturationIndices.back();
}

void criterionIdeals(Outcome& o) {
  for (const auto& inst : instances) {
    o.require(verifyVanishing(kMinusGenerators(inst.arrangement), inst.filtration.points),
              inst.name + ": a K- generator does not vanish");
    o.require(sameSeries(toIntegers(powerIdealQuotientDims(inst.arrangement)), toIntegers(inst.filtration.grDims)),
              inst.name + ": power ideal dims differ from grDims");
  }
  o.detail << instances.size() << " instances";
}

void criterionDeterminism(Outcome& o) {
  const auto house = houseGraph();
  o.require(toJson(analyzeGraph(house)) == toJson(analyzeGraph(house)), "graph reports differ");
  const auto arr = parseArrangement(readTextFile(dataPath("house.arr")));
  o.require(toJson(analyzeArrangement(arr)) == toJson(analyzeArrangement(arr)), "arrangement reports differ");
  o.require(toJson(runRandomSuite(7, 30, 7)) == toJson(runRandomSuite(7, 30, 7)), "random summaries differ");
  o.detail << "graph, arrangement and random-suite JSON byte-identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria{
      {"house end-to-end", criterionHouse},
      {"cycle family and divided powers", criterionCycles},
      {"Tutte identity on random graphs", criterionTutte},
      {"deletion-contraction bijection and dimensions", criterionDeletionContraction},
      {"saturation", criterionSaturation},
      {"ideal layer", criterionIdeals},
      {"determinism", criterionDeterminism},
  };
  int failures = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      criteria[n].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << "criterion " << n + 1 << " [" << (o.pass ? "PASS" : "FAIL") << "] " << criteria[n].first << ": "
              << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
