// izalg: internal zonotopal algebras of graphs and arrangements.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "zonotopal/analysis.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/random_suite.hpp"
#include "zonotopal/report_json.hpp"
#include "zonotopal/text_format.hpp"

namespace {

enum Exit : int { ok = 0, internal = 1, parse = 2, size = 3, verification = 4, notUnimodular = 5 };

constexpr const char* kConventions = R"(
Output conventions:
  Interior lattice points are listed in lexicographic order.
  Cocircuits are primitive, with first nonzero coordinate positive, sorted
  lexicographically; d+ and d- count elements on which they are +1 and -1.
  Graph input is coordinatized by fundamental cycles of the spanning forest
  that greedily prefers smaller arrow ids; coordinate j is the j-th
  non-forest arrow.
  Series are listed constant term first.

Exit codes: 0 all verdicts pass, 2 parse error, 3 size limit exceeded,
4 verification failure, 5 arrangement not totally unimodular.
)";

int emit(const zonotopal::AnalysisReport& report, bool json) {
  std::cout << (json ? zonotopal::toJson(report) : zonotopal::renderText(report));
  return report.allPass() ? ok : verification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Internal zonotopal algebras via orbit harmonics"};
  app.footer(kConventions);
  app.require_subcommand(1);

  bool json = false;
  bool assumeTu = false;
  std::optional<unsigned> maxDegree;
  std::string path;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t maxEdges = 7;

  auto* graph = app.add_subcommand("graph", "Analyze the cographical arrangement of a directed graph");
  graph->add_option("file", path, "Graph file: 'vertex <label>' and 'arrow <id> <tail> <head>' lines")->required();
  graph->add_flag("--json", json, "Emit the JSON report");
  graph->add_option("--max-degree", maxDegree, "Fail if the filtration needs a higher degree");

  auto* arrangement = app.add_subcommand("arrangement", "Analyze an integer vector arrangement");
  arrangement->add_option("file", path, "Arrangement file: 'rank <r>' then 'col <label> <r integers>' lines")
      ->required();
  arrangement->add_flag("--json", json, "Emit the JSON report");
  arrangement->add_flag("--assume-tu", assumeTu, "Skip the subdeterminant check (for inputs beyond its cap)");
  arrangement->add_option("--max-degree", maxDegree, "Fail if the filtration needs a higher degree");

  auto* random = app.add_subcommand("random", "Run all cross-checks on seeded random connected multigraphs");
  random->add_option("--seed", seed, "Generator seed")->capture_default_str();
  random->add_option("--count", count, "Number of graphs")->capture_default_str();
  random->add_option("--max-edges", maxEdges, "Largest edge count (at most 9)")->capture_default_str();
  random->add_flag("--json", json, "Emit the JSON summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return parse;
  }

  using namespace zonotopal;
  try {
    AnalysisOptions options;
    options.assumeTotallyUnimodular = assumeTu;
    options.maxDegree = maxDegree;
    if (*graph) return emit(analyzeGraph(parseGraph(readTextFile(path)), options), json);
    if (*arrangement) return emit(analyzeArrangement(parseArrangement(readTextFile(path)), options), json);
    const auto summary = runRandomSuite(seed, count, maxEdges);
    std::cout << (json ? toJson(summary) : renderText(summary));
    return summary.failed == 0 ? ok : verification;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return parse;
  } catch (const NotTotallyUnimodular& e) {
    std::cerr << "not totally unimodular: " << e.what() << '\n';
    return notUnimodular;
  } catch (const SizeExceeded& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return size;
  } catch (const DegreeOverflow& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return size;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return parse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return internal;
  }
}
