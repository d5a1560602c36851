#pragma once

#include <string>
#include <string_view>

#include "zonotopal/arrangement.hpp"
#include "zonotopal/graph.hpp"

namespace zonotopal {

/// Graph format, one statement per line:
///   vertex <label>
///   arrow <id> <tail> <head>
/// Blank lines and text after '#' are ignored. Arrow endpoints must be
/// declared vertices. Throws ParseError with 1-based line and column.
DirectedGraph parseGraph(std::string_view text);

/// Arrangement format: `rank <r>` first, then `col <label> <r integers>` lines.
/// The result is not marked totally unimodular.
VectorArrangement parseArrangement(std::string_view text);

/// Canonical text; parsing it back yields an equal object.
std::string formatGraph(const DirectedGraph& g);
std::string formatArrangement(const VectorArrangement& va);

/// Reads a whole file; throws InvalidArgument if it cannot be opened.
std::string readTextFile(const std::string& path);

} // namespace zonotopal
