#include <doctest.h>

#include "support.hpp"
#include "zonotopal/analysis.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/report_json.hpp"

using namespace testing;

TEST_CASE("arrangement parsing") {
  const auto va = parseArrangement(readTextFile(dataPath("house.arr")));
  CHECK(va.columns() == houseArrangement().columns());
  CHECK_FALSE(va.markedTotallyUnimodular());
  CHECK(parseArrangement(formatArrangement(va)) == va);
  CHECK_THROWS_AS(parseArrangement("col a 1\n"), ParseError);
  CHECK_THROWS_AS(parseArrangement("rank 2\ncol a 1\n"), ParseError);
  CHECK_THROWS_AS(parseArrangement("rank 2\ncol a 1 0\n"), ParseError);
  CHECK_THROWS_AS(parseArrangement("rank 1\ncol a 1\ncol a 1\n"), ParseError);
  CHECK_THROWS_AS(parseArrangement("rank 1\ncol a x\n"), ParseError);
  CHECK_THROWS_AS(readTextFile(dataPath("missing.graph")), InvalidArgument);
}

TEST_CASE("bad graph file reports the undeclared vertex position") {
  try {
    parseGraph(readTextFile(dataPath("bad.graph")));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 11);
  }
}

TEST_CASE("graph and arrangement routes agree on the house") {
  const auto viaGraph = analyzeGraph(houseGraph());
  const auto viaArrangement = analyzeArrangement(parseArrangement(readTextFile(dataPath("house.arr"))));
  CHECK(viaGraph.allPass());
  CHECK(viaArrangement.allPass());
  CHECK(viaArrangement.unimodularitySource == "verified");
  CHECK(viaGraph.unimodularitySource == "cographical");
  CHECK(viaGraph.tutte == viaArrangement.tutte);
  CHECK(viaGraph.izHilbert == viaArrangement.izHilbert);
  CHECK(viaGraph.qDims == viaArrangement.qDims);
  CHECK(viaGraph.grDims == viaArrangement.grDims);
  CHECK(viaGraph.powerIdealDims == viaArrangement.powerIdealDims);
  CHECK(viaGraph.interiorPoints.size() == viaArrangement.interiorPoints.size());
  CHECK(viaGraph.su2Poincare == ints({1, 2, 2, 1}));
  CHECK(viaGraph.theoremIdentity == std::optional<bool>(true));
  CHECK(viaGraph.tutteDuality == std::optional<bool>(true));
  CHECK_FALSE(viaArrangement.theoremIdentity.has_value());
  CHECK(viaArrangement.deletionContraction.size() == 6);
  CHECK(viaArrangement.cocircuits[1].generator == "binom(x1 - x2 + 1, 4)");
}

TEST_CASE("small arrangement inputs") {
  const auto ones = analyzeArrangement(parseArrangement(readTextFile(dataPath("ones4.arr"))));
  CHECK(ones.allPass());
  CHECK(ones.grDims == std::vector<std::size_t>{1, 1, 1});
  const auto nontu = parseArrangement(readTextFile(dataPath("nontu.arr")));
  CHECK_THROWS_AS(analyzeArrangement(nontu), NotTotallyUnimodular);
  AnalysisOptions assume;
  assume.assumeTotallyUnimodular = true;
  CHECK(analyzeArrangement(onesArrangement(3, false), assume).unimodularitySource == "assumed");
  const auto loop = analyzeGraph(parseGraph(readTextFile(dataPath("selfloop.graph"))));
  CHECK(loop.interiorPoints.empty());
  CHECK(loop.allPass());
  AnalysisOptions tight;
  tight.maxDegree = 1;
  CHECK_THROWS_AS(analyzeGraph(houseGraph(), tight), DegreeOverflow);
}

TEST_CASE("text rendering mentions every verdict") {
  const auto text = renderText(analyzeGraph(houseGraph()));
  for (const char* key : {"saturation", "divided powers", "Hilbert = Tutte", "power ideal dims", "overall: PASS"})
    CHECK(text.find(key) != std::string::npos);
}

TEST_CASE("JSON report round trip") {
  const auto report = analyzeGraph(houseGraph());
  const auto json = toJson(report);
  CHECK(json == toJson(analyzeGraph(houseGraph())));
  CHECK(analysisReportFromJson(json) == report);
  CHECK(json.rfind("{\n  \"schemaVersion\": 1,", 0) == 0);
  CHECK_THROWS_AS(analysisReportFromJson("{}"), InvalidArgument);
  CHECK_THROWS_AS(analysisReportFromJson("not json"), InvalidArgument);
  auto wrongVersion = json;
  wrongVersion.replace(wrongVersion.find("\"schemaVersion\": 1"), 18, "\"schemaVersion\": 2");
  CHECK_THROWS_AS(analysisReportFromJson(wrongVersion), InvalidArgument);
}

TEST_CASE("integers beyond 2^53 are written as strings") {
  AnalysisReport r = analyzeArrangement(onesArrangement(2));
  const Integer big = (Integer(1) << 60) + 1;
  r.izHilbert.push_back(big);
  r.izHilbert.push_back(-big);
  r.izHilbert.push_back(Integer(1) << 53);
  const auto json = toJson(r);
  CHECK(json.find("\"1152921504606846977\"") != std::string::npos);
  CHECK(json.find("\"-1152921504606846977\"") != std::string::npos);
  CHECK(json.find("9007199254740992") != std::string::npos);
  CHECK(json.find("\"9007199254740992\"") == std::string::npos);
  CHECK(analysisReportFromJson(json) == r);
}

TEST_CASE("random suite") {
  const auto empty = runRandomSuite(1, 0, 7);
  CHECK(empty.passed == 0);
  CHECK(empty.failed == 0);
  const auto s = runRandomSuite(1, 50, 7);
  CHECK(s.passed == 50);
  CHECK(s.failed == 0);
  CHECK(s.exactnessInstances >= 20);
  CHECK_FALSE(s.firstFailureIndex.has_value());
  CHECK(runRandomSuite(1, 50, 7) == s);
  CHECK(toJson(runRandomSuite(1, 50, 7)) == toJson(s));
  CHECK(randomSuiteSummaryFromJson(toJson(s)) == s);
  CHECK(renderText(s).find("passed               50") != std::string::npos);
  CHECK_THROWS_AS(runRandomSuite(1, 1, kMaxRandomSuiteEdges + 1), SizeExceeded);
}

TEST_CASE("random graphs are connected with the requested edge counts") {
  std::mt19937_64 rng(71);
  std::vector<std::size_t> seen(8, 0);
  for (int t = 0; t < 400; ++t) {
    const auto g = randomConnectedMultigraph(rng, 7);
    CHECK(g.arrowCount() >= 1);
    CHECK(g.arrowCount() <= 7);
    CHECK(connectedComponents(g) == 1);
    CHECK(g.arrowCount() > graphRank(g));
    std::vector<ArrowId> ids;
    for (const auto& a : g.arrows()) ids.push_back(a.id);
    std::vector<ArrowId> expected(g.arrowCount());
    std::iota(expected.begin(), expected.end(), ArrowId{1});
    CHECK(ids == expected);
    ++seen[g.arrowCount()];
  }
  for (std::size_t m = 1; m <= 7; ++m) CHECK(seen[m] > 20);
}

TEST_CASE("failing instances are reported") {
  // Hand-built failing summary; nothing in the suite produces one.
  RandomSuiteSummary s;
  s.count = 1;
  s.failed = 1;
  s.firstFailureIndex = 0;
  s.firstFailureGraph = formatGraph(houseGraph());
  s.firstFailureReasons = {"dimension identity fails"};
  const auto text = renderText(s);
  CHECK(text.find("first failure (instance 0)") != std::string::npos);
  CHECK(text.find("arrow 6 e d") != std::string::npos);
  CHECK(randomSuiteSummaryFromJson(toJson(s)) == s);
}
