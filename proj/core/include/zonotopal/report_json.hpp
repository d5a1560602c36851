#pragma once

#include <string>

#include "zonotopal/analysis.hpp"
#include "zonotopal/random_suite.hpp"

namespace zonotopal {

/// Keys appear in declaration order. Integers beyond 2^53 in magnitude are
/// written as decimal strings; the readers accept either representation.
std::string toJson(const AnalysisReport& report);
std::string toJson(const RandomSuiteSummary& summary);

/// Throws InvalidArgument on malformed input or a schema version mismatch.
AnalysisReport analysisReportFromJson(const std::string& text);
RandomSuiteSummary randomSuiteSummaryFromJson(const std::string& text);

} // namespace zonotopal
