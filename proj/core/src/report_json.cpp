#include "zonotopal/report_json.hpp"

#include <json.hpp>

#include "zonotopal/errors.hpp"

namespace zonotopal {

namespace {

using Json = nlohmann::ordered_json;

// Largest magnitude written as a JSON number; doubles are exact up to here.
const Integer kExactDoubleLimit = Integer(1) << 53;

Json encode(const Integer& z) {
  if (abs(z) <= kExactDoubleLimit) return Json(z.get_si());
  return Json(z.get_str());
}

Integer decodeInteger(const Json& j) {
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InvalidArgument("malformed integer string");
    return z;
  }
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  throw InvalidArgument("expected an integer");
}

template <class Range>
Json encodeAll(const Range& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(encode(v));
  return a;
}

std::vector<Integer> decodeIntegers(const Json& j) {
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(decodeInteger(x));
  return out;
}

Json encodeSizes(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json encodeOptional(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

std::optional<bool> decodeOptional(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

Json encodeTutte(const BivariatePolynomial& t) {
  Json terms = Json::array();
  for (const auto& [e, c] : t.terms()) terms.push_back(Json::array({e.first, e.second, encode(c)}));
  Json j;
  j["text"] = t.toString();
  j["terms"] = std::move(terms);
  return j;
}

BivariatePolynomial decodeTutte(const Json& j) {
  BivariatePolynomial t;
  for (const auto& term : j.at("terms"))
    t += BivariatePolynomial::monomial(term.at(0).get<unsigned>(), term.at(1).get<unsigned>(), decodeInteger(term.at(2)));
  return t;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

} // namespace

std::string toJson(const AnalysisReport& r) {
  Json j;
  j["schemaVersion"] = r.schemaVersion;
  j["inputKind"] = r.inputKind;
  j["input"] = r.input;
  j["rank"] = r.rank;
  j["size"] = r.size;
  j["totallyUnimodular"] = r.totallyUnimodular;
  j["unimodularitySource"] = r.unimodularitySource;
  Json cocircuits = Json::array();
  for (const auto& c : r.cocircuits) {
    Json row;
    row["covector"] = encodeAll(c.covector);
    row["dPlus"] = c.dPlus;
    row["dMinus"] = c.dMinus;
    row["generator"] = c.generator;
    cocircuits.push_back(std::move(row));
  }
  j["cocircuits"] = std::move(cocircuits);
  Json points = Json::array();
  for (const auto& z : r.interiorPoints) points.push_back(encodeAll(z));
  j["interiorPoints"] = std::move(points);
  j["tutte"] = encodeTutte(r.tutte);
  j["izHilbert"] = encodeAll(r.izHilbert);
  j["qDims"] = encodeSizes(r.qDims);
  j["grDims"] = encodeSizes(r.grDims);
  j["saturationIndices"] = encodeAll(r.saturationIndices);
  j["powerIdealDims"] = encodeSizes(r.powerIdealDims);
  j["su2Poincare"] = encodeAll(r.su2Poincare);
  Json verdicts;
  verdicts["saturation"] = r.saturation;
  verdicts["dividedPowerGeneration"] = r.dividedPowerGeneration;
  verdicts["hilbertMatchesTutte"] = r.hilbertMatchesTutte;
  verdicts["pointCountMatchesTutte"] = r.pointCountMatchesTutte;
  verdicts["generatorsVanish"] = r.generatorsVanish;
  verdicts["powerIdealMatches"] = r.powerIdealMatches;
  verdicts["theoremIdentity"] = encodeOptional(r.theoremIdentity);
  verdicts["tutteDuality"] = encodeOptional(r.tutteDuality);
  j["verdicts"] = std::move(verdicts);
  Json dc = Json::array();
  for (const auto& d : r.deletionContraction) {
    Json row;
    row["element"] = d.element;
    row["points"] = d.points;
    row["deletionPoints"] = d.deletionPoints;
    row["contractionPoints"] = d.contractionPoints;
    row["bijection"] = d.bijection;
    row["dimensionIdentity"] = d.dimensionIdentity;
    row["exactOverQ"] = d.exactOverQ;
    row["exactOverZ"] = d.exactOverZ;
    dc.push_back(std::move(row));
  }
  j["deletionContraction"] = std::move(dc);
  j["allPass"] = r.allPass();
  return j.dump(2) + "\n";
}

AnalysisReport analysisReportFromJson(const std::string& text) {
  return guarded([&] {
    const Json j = Json::parse(text);
    AnalysisReport r;
    r.schemaVersion = j.at("schemaVersion").get<int>();
    if (r.schemaVersion != kReportSchemaVersion)
      throw InvalidArgument("unsupported schema version " + std::to_string(r.schemaVersion));
    r.inputKind = j.at("inputKind").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.rank = j.at("rank").get<std::size_t>();
    r.size = j.at("size").get<std::size_t>();
    r.totallyUnimodular = j.at("totallyUnimodular").get<bool>();
    r.unimodularitySource = j.at("unimodularitySource").get<std::string>();
    for (const auto& row : j.at("cocircuits"))
      r.cocircuits.push_back({decodeIntegers(row.at("covector")), row.at("dPlus").get<std::size_t>(),
                              row.at("dMinus").get<std::size_t>(), row.at("generator").get<std::string>()});
    for (const auto& z : j.at("interiorPoints")) r.interiorPoints.push_back(decodeIntegers(z));
    r.tutte = decodeTutte(j.at("tutte"));
    r.izHilbert = decodeIntegers(j.at("izHilbert"));
    r.qDims = j.at("qDims").get<std::vector<std::size_t>>();
    r.grDims = j.at("grDims").get<std::vector<std::size_t>>();
    r.saturationIndices = decodeIntegers(j.at("saturationIndices"));
    r.powerIdealDims = j.at("powerIdealDims").get<std::vector<std::size_t>>();
    r.su2Poincare = decodeIntegers(j.at("su2Poincare"));
    const auto& v = j.at("verdicts");
    r.saturation = v.at("saturation").get<bool>();
    r.dividedPowerGeneration = v.at("dividedPowerGeneration").get<bool>();
    r.hilbertMatchesTutte = v.at("hilbertMatchesTutte").get<bool>();
    r.pointCountMatchesTutte = v.at("pointCountMatchesTutte").get<bool>();
    r.generatorsVanish = v.at("generatorsVanish").get<bool>();
    r.powerIdealMatches = v.at("powerIdealMatches").get<bool>();
    r.theoremIdentity = decodeOptional(v.at("theoremIdentity"));
    r.tutteDuality = decodeOptional(v.at("tutteDuality"));
    for (const auto& row : j.at("deletionContraction")) {
      DeletionContractionRow d;
      d.element = row.at("element").get<std::string>();
      d.points = row.at("points").get<std::size_t>();
      d.deletionPoints = row.at("deletionPoints").get<std::size_t>();
      d.contractionPoints = row.at("contractionPoints").get<std::size_t>();
      d.bijection = row.at("bijection").get<bool>();
      d.dimensionIdentity = row.at("dimensionIdentity").get<bool>();
      d.exactOverQ = row.at("exactOverQ").get<bool>();
      d.exactOverZ = row.at("exactOverZ").get<bool>();
      r.deletionContraction.push_back(std::move(d));
    }
    return r;
  });
}

std::string toJson(const RandomSuiteSummary& s) {
  Json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["seed"] = s.seed;
  j["count"] = s.count;
  j["maxEdges"] = s.maxEdges;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["elementsChecked"] = s.elementsChecked;
  j["exactnessInstances"] = s.exactnessInstances;
  Json failure = nullptr;
  if (s.firstFailureIndex) {
    failure = Json::object();
    failure["index"] = *s.firstFailureIndex;
    failure["graph"] = s.firstFailureGraph;
    failure["reasons"] = s.firstFailureReasons;
  }
  j["firstFailure"] = std::move(failure);
  return j.dump(2) + "\n";
}

RandomSuiteSummary randomSuiteSummaryFromJson(const std::string& text) {
  return guarded([&] {
    const Json j = Json::parse(text);
    if (j.at("schemaVersion").get<int>() != kReportSchemaVersion) throw InvalidArgument("unsupported schema version");
    RandomSuiteSummary s;
    s.seed = j.at("seed").get<std::uint64_t>();
    s.count = j.at("count").get<std::size_t>();
    s.maxEdges = j.at("maxEdges").get<std::size_t>();
    s.passed = j.at("passed").get<std::size_t>();
    s.failed = j.at("failed").get<std::size_t>();
    s.elementsChecked = j.at("elementsChecked").get<std::size_t>();
    s.exactnessInstances = j.at("exactnessInstances").get<std::size_t>();
    const auto& f = j.at("firstFailure");
    if (!f.is_null()) {
      s.firstFailureIndex = f.at("index").get<std::size_t>();
      s.firstFailureGraph = f.at("graph").get<std::string>();
      s.firstFailureReasons = f.at("reasons").get<std::vector<std::string>>();
    }
    return s;
  });
}

} // namespace zonotopal
