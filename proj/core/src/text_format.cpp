#include "zonotopal/text_format.hpp"

#include <optional>
#include <fstream>
#include <sstream>
#include <vector>

#include "zonotopal/errors.hpp"

namespace zonotopal {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

// Calls fn(lineNumber, tokens) for each non-empty line.
template <class Fn>
void forEachStatement(std::string_view text, Fn&& fn) {
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++lineNo;
    auto tokens = tokenize(text.substr(pos, end - pos));
    if (!tokens.empty()) fn(lineNo, tokens);
    pos = end + 1;
  }
}

Integer parseInteger(const Token& t, std::size_t line) {
  std::string s(t.text);
  std::size_t digits = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (digits == s.size()) throw ParseError("expected an integer, found '" + s + "'", line, t.column);
  for (std::size_t i = digits; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw ParseError("expected an integer, found '" + s + "'", line, t.column);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

void expectArity(const std::vector<Token>& tokens, std::size_t n, std::size_t line, const char* usage) {
  if (tokens.size() == n) return;
  std::size_t column = tokens.size() > n ? tokens[n].column : tokens.back().column + tokens.back().text.size();
  throw ParseError(std::string("expected '") + usage + "'", line, column);
}

} // namespace

DirectedGraph parseGraph(std::string_view text) {
  DirectedGraph g;
  forEachStatement(text, [&](std::size_t line, const std::vector<Token>& tokens) {
    const auto& kw = tokens[0];
    if (kw.text == "vertex") {
      expectArity(tokens, 2, line, "vertex <label>");
      if (g.hasVertex(tokens[1].text))
        throw ParseError("duplicate vertex '" + std::string(tokens[1].text) + "'", line, tokens[1].column);
      g.addVertex(std::string(tokens[1].text));
    } else if (kw.text == "arrow") {
      expectArity(tokens, 4, line, "arrow <id> <tail> <head>");
      Integer id = parseInteger(tokens[1], line);
      if (!id.fits_slong_p()) throw ParseError("arrow id out of range", line, tokens[1].column);
      for (int k = 2; k <= 3; ++k)
        if (!g.hasVertex(tokens[k].text))
          throw ParseError("undeclared vertex '" + std::string(tokens[k].text) + "'", line, tokens[k].column);
      try {
        g.addArrow(id.get_si(), tokens[2].text, tokens[3].text);
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), line, tokens[1].column);
      }
    } else {
      throw ParseError("unknown statement '" + std::string(kw.text) + "'", line, kw.column);
    }
  });
  return g;
}

VectorArrangement parseArrangement(std::string_view text) {
  std::optional<std::size_t> rank;
  std::vector<std::string> labels;
  std::vector<std::vector<Integer>> columns;
  std::size_t lastLine = 0;
  forEachStatement(text, [&](std::size_t line, const std::vector<Token>& tokens) {
    lastLine = line;
    const auto& kw = tokens[0];
    if (kw.text == "rank") {
      if (rank) throw ParseError("rank given twice", line, kw.column);
      expectArity(tokens, 2, line, "rank <r>");
      Integer r = parseInteger(tokens[1], line);
      if (r < 0 || r > 64) throw ParseError("rank must lie in 0..64", line, tokens[1].column);
      rank = r.get_ui();
    } else if (kw.text == "col") {
      if (!rank) throw ParseError("'rank' must precede the first column", line, kw.column);
      expectArity(tokens, 2 + *rank, line, "col <label> <r integers>");
      std::string label(tokens[1].text);
      for (const auto& l : labels)
        if (l == label) throw ParseError("duplicate label '" + label + "'", line, tokens[1].column);
      std::vector<Integer> v;
      for (std::size_t k = 0; k < *rank; ++k) v.push_back(parseInteger(tokens[2 + k], line));
      labels.push_back(std::move(label));
      columns.push_back(std::move(v));
    } else {
      throw ParseError("unknown statement '" + std::string(kw.text) + "'", line, kw.column);
    }
  });
  if (!rank) throw ParseError("missing 'rank' statement", lastLine + 1, 1);
  try {
    return VectorArrangement(*rank, std::move(labels), IntMatrix::fromColumns(*rank, columns));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), lastLine + 1, 1);
  }
}

std::string formatGraph(const DirectedGraph& g) {
  std::ostringstream os;
  for (const auto& v : g.vertexLabels()) os << "vertex " << v << '\n';
  for (const auto& a : g.arrows())
    os << "arrow " << a.id << ' ' << g.vertexLabels()[a.tail] << ' ' << g.vertexLabels()[a.head] << '\n';
  return os.str();
}

std::string formatArrangement(const VectorArrangement& va) {
  std::ostringstream os;
  os << "rank " << va.rank() << '\n';
  for (std::size_t a = 0; a < va.size(); ++a) {
    os << "col " << va.label(a);
    for (std::size_t i = 0; i < va.rank(); ++i) os << ' ' << va.columns()(i, a);
    os << '\n';
  }
  return os.str();
}

std::string readTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

} // namespace zonotopal
