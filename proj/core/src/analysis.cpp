#include "zonotopal/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "zonotopal/filtration.hpp"
#include "zonotopal/ideals.hpp"
#include "zonotopal/text_format.hpp"

namespace zonotopal {

namespace {

std::vector<Integer> trimmed(std::vector<Integer> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Shared by both routes; `va` is already marked totally unimodular.
void analyzeCore(const VectorArrangement& va, const BivariatePolynomial& tutte, const AnalysisOptions& options,
                 AnalysisReport& r) {
  r.rank = va.rank();
  r.size = va.size();
  r.totallyUnimodular = true;

  const auto cocircuits = enumerateCocircuits(va);
  const auto generators = kMinusGenerators(cocircuits);
  for (std::size_t k = 0; k < cocircuits.size(); ++k)
    r.cocircuits.push_back({cocircuits[k].covector, cocircuits[k].dPlus, cocircuits[k].dMinus,
                            generators[k].closedForm});
  r.interiorPoints = interiorLatticePoints(va, cocircuits);

  const auto filtration = filtrationOfPoints(r.interiorPoints, va.rank(), options.maxDegree);
  r.tutte = tutte;
  r.izHilbert = izHilbertSeries(tutte, va.size(), va.rank());
  r.qDims = filtration.qDims;
  r.grDims = filtration.grDims;
  r.saturationIndices = filtration.saturationIndices;
  r.powerIdealDims = powerIdealQuotientDims(va);

  r.saturation = verifySaturation(filtration);
  r.dividedPowerGeneration = dividedPowerGenerationCheck(filtration);
  r.hilbertMatchesTutte = sameSeries(toIntegers(r.grDims), r.izHilbert);
  r.pointCountMatchesTutte = Integer(static_cast<unsigned long>(r.interiorPoints.size())) == tutte.evaluate(0, 1);
  r.generatorsVanish = verifyVanishing(generators, r.interiorPoints);
  r.powerIdealMatches = sameSeries(toIntegers(r.powerIdealDims), toIntegers(r.grDims));

  const auto special = loopsAndColoops(va);
  for (std::size_t a = 0; a < va.size(); ++a) {
    if (std::count(special.loops.begin(), special.loops.end(), a) ||
        std::count(special.coloops.begin(), special.coloops.end(), a))
      continue;
    const auto check = deletionContractionCheck(va, a);
    DeletionContractionRow row;
    row.element = check.element;
    row.points = check.pointCount;
    row.deletionPoints = check.deletionPointCount;
    row.contractionPoints = check.contractionPointCount;
    row.bijection = check.inclusion && check.bijection;
    auto all = [&](auto field) {
      return std::all_of(check.degrees.begin(), check.degrees.end(), [&](const DegreeExactness& d) { return d.*field; });
    };
    row.dimensionIdentity = all(&DegreeExactness::dimensionIdentity);
    row.exactOverQ = all(&DegreeExactness::exactOverQ);
    row.exactOverZ = all(&DegreeExactness::exactOverZ);
    r.deletionContraction.push_back(std::move(row));
  }
}

std::string joinIntegers(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + "]";
}

std::string pointString(const LatticePoint& z) {
  std::string s = "(";
  for (std::size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + z[i].get_str();
  return s + ")";
}

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

} // namespace

bool sameSeries(const std::vector<Integer>& a, const std::vector<Integer>& b) { return trimmed(a) == trimmed(b); }

std::vector<Integer> toIntegers(const std::vector<std::size_t>& v) {
  std::vector<Integer> out;
  for (auto x : v) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

bool AnalysisReport::allPass() const {
  bool ok = totallyUnimodular && saturation && dividedPowerGeneration && hilbertMatchesTutte &&
            pointCountMatchesTutte && generatorsVanish && powerIdealMatches;
  for (const auto& row : deletionContraction) ok = ok && row.ok();
  if (theoremIdentity) ok = ok && *theoremIdentity;
  if (tutteDuality) ok = ok && *tutteDuality;
  return ok;
}

AnalysisReport analyzeGraph(const DirectedGraph& g, const AnalysisOptions& options) {
  AnalysisReport r;
  r.inputKind = "graph";
  r.input = formatGraph(g);
  r.unimodularitySource = "cographical";
  const auto ca = cographicalArrangement(g);
  const auto graphTutte = tuttePolynomial(g);
  analyzeCore(ca.arrangement, graphTutte.swapped(), options, r);
  r.su2Poincare = su2PoincarePolynomial(g);
  r.theoremIdentity = r.hilbertMatchesTutte && sameSeries(r.izHilbert, r.su2Poincare);
  if (g.arrowCount() <= kMaxSizeForSubsetExpansion)
    r.tutteDuality = tutteOfArrangement(ca.arrangement) == graphTutte.swapped();
  return r;
}

AnalysisReport analyzeArrangement(const VectorArrangement& va, const AnalysisOptions& options) {
  AnalysisReport r;
  r.inputKind = "arrangement";
  r.input = formatArrangement(va);
  VectorArrangement tu = va;
  if (va.markedTotallyUnimodular()) {
    r.unimodularitySource = "assumed";
  } else if (options.assumeTotallyUnimodular) {
    tu = va.markedAsTotallyUnimodular();
    r.unimodularitySource = "assumed";
  } else {
    tu = requireTotallyUnimodular(va);
    r.unimodularitySource = "verified";
  }
  analyzeCore(tu, tutteOfArrangement(tu), options, r);
  return r;
}

std::string renderText(const AnalysisReport& r) {
  std::ostringstream os;
  os << "input (" << r.inputKind << ")\n";
  std::istringstream in(r.input);
  for (std::string line; std::getline(in, line);) os << "  " << line << '\n';
  os << '\n';
  os << "rank " << r.rank << ", |A| = " << r.size << ", totally unimodular: " << (r.totallyUnimodular ? "yes" : "no")
     << " (" << r.unimodularitySource << ")\n\n";

  os << "cocircuits (" << r.cocircuits.size() << ")\n";
  std::size_t width = 8;
  for (const auto& c : r.cocircuits) width = std::max(width, pointString(c.covector).size());
  os << "  " << std::left << std::setw(static_cast<int>(width)) << "covector" << "  d+  d-  generator\n";
  for (const auto& c : r.cocircuits)
    os << "  " << std::left << std::setw(static_cast<int>(width)) << pointString(c.covector) << "  " << std::right
       << std::setw(2) << c.dPlus << "  " << std::setw(2) << c.dMinus << "  " << c.generator << '\n';
  os << '\n';

  os << "interior lattice points (" << r.interiorPoints.size() << ")\n  ";
  for (std::size_t i = 0; i < r.interiorPoints.size(); ++i) os << (i ? " " : "") << pointString(r.interiorPoints[i]);
  os << "\n\n";

  os << std::left;
  auto line = [&](const std::string& key, const std::string& value) {
    os << "  " << std::setw(22) << key << value << '\n';
  };
  os << "series\n";
  line("tutte T(x,y)", r.tutte.toString());
  line("IZ Hilbert (Tutte)", joinIntegers(r.izHilbert));
  line("dim R_i(Q)", joinIntegers(toIntegers(r.qDims)));
  line("graded dims", joinIntegers(toIntegers(r.grDims)));
  line("saturation indices", joinIntegers(r.saturationIndices));
  line("power ideal quotient", joinIntegers(toIntegers(r.powerIdealDims)));
  if (r.inputKind == "graph") line("SU(2) Poincare", joinIntegers(r.su2Poincare));
  os << '\n';

  os << "verdicts\n";
  line("saturation", verdict(r.saturation));
  line("divided powers", verdict(r.dividedPowerGeneration));
  line("Hilbert = Tutte", verdict(r.hilbertMatchesTutte));
  line("|Z-| = T(0,1)", verdict(r.pointCountMatchesTutte));
  line("generators vanish", verdict(r.generatorsVanish));
  line("power ideal dims", verdict(r.powerIdealMatches));
  if (r.theoremIdentity) line("gr = IZ = SU(2)", verdict(*r.theoremIdentity));
  if (r.tutteDuality) line("T_matroid = T_G(y,x)", verdict(*r.tutteDuality));
  os << '\n';

  os << "deletion/contraction (" << r.deletionContraction.size() << " elements)\n";
  os << "  element  |Z-|  |Z-'|  |Z-''|  bijection  dims  exact/Q  exact/Z\n";
  for (const auto& d : r.deletionContraction)
    os << "  " << std::left << std::setw(7) << d.element << std::right << std::setw(6) << d.points << std::setw(7)
       << d.deletionPoints << std::setw(8) << d.contractionPoints << "  " << std::left << std::setw(9)
       << verdict(d.bijection) << "  " << std::setw(4) << verdict(d.dimensionIdentity) << "  " << std::setw(7)
       << verdict(d.exactOverQ) << "  " << verdict(d.exactOverZ) << '\n';
  os << '\n' << "overall: " << (r.allPass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

} // namespace zonotopal
