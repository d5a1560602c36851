#include "zonotopal/filtration.hpp"

#include <algorithm>
#include <functional>

#include "zonotopal/errors.hpp"
#include "zonotopal/funcspace.hpp"
#include "zonotopal/linalg.hpp"
#include "zonotopal/tutte.hpp"

namespace zonotopal {

namespace {

Integer pivotProduct(const IntMatrix& hnf, const std::vector<std::size_t>& pivotRows) {
  Integer p = 1;
  for (std::size_t j = 0; j < pivotRows.size(); ++j) p *= hnf(pivotRows[j], j);
  return p;
}

std::vector<std::size_t> pivotRowsOf(const IntMatrix& hnf) {
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < hnf.cols(); ++j) {
    std::size_t i = 0;
    while (i < hnf.rows() && hnf(i, j) == 0) ++i;
    rows.push_back(i);
  }
  return rows;
}

std::vector<Integer> binomialProductValues(std::span<const unsigned> exponents, const LatticePointSet& points) {
  const BinomialProduct f{{exponents.begin(), exponents.end()}};
  std::vector<Integer> v;
  v.reserve(points.size());
  for (const auto& z : points) v.push_back(f.evaluate(z));
  return v;
}

// Columns are the binomial products of degree <= d evaluated on the points.
IntMatrix binomialEvaluationColumns(const FiltrationReport& report, unsigned d) {
  auto basis = binomialProductsUpTo(report.latticeRank, d);
  IntMatrix m(report.pointCount, basis.size());
  for (std::size_t f = 0; f < basis.size(); ++f)
    for (std::size_t z = 0; z < report.pointCount; ++z) m(z, f) = basis[f].evaluate(report.points[z]);
  return m;
}

bool allZero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Coordinates of v + R_(d-1)(Z) in gr_d. The functionals vanishing on
// R_(d-1)(Z) carry R_d(Z) onto a lattice whose HNF fixes the coordinates.
std::vector<Integer> residueOf(const FiltrationReport& report, unsigned d, std::span<const Integer> v) {
  if (d > report.topDegree || report.empty()) return {};
  IntMatrix prev = report.integralBasis(static_cast<long>(d) - 1);
  IntMatrix functionals = integerKernel(prev.transpose()).transpose();
  IntMatrix image = hermiteBasis(functionals * report.integralBases[d]);
  auto coords = solveIntegral(image, functionals * v);
  if (!coords) throw NotIntegral("function does not lie in the integral filtration piece of degree " +
                                 std::to_string(d));
  return *coords;
}

std::size_t rankOfUnion(const IntMatrix& a, const IntMatrix& b) { return rank(a.appendColumns(b)); }

} // namespace

std::size_t FiltrationReport::qDim(long degree) const {
  if (empty() || degree < 0) return 0;
  if (degree > static_cast<long>(topDegree)) return pointCount;
  return qDims[static_cast<std::size_t>(degree)];
}

IntMatrix FiltrationReport::integralBasis(long degree) const {
  if (empty()) return IntMatrix(0, 0);
  if (degree < 0) return IntMatrix(pointCount, 0);
  return integralBases[std::min(static_cast<std::size_t>(degree), static_cast<std::size_t>(topDegree))];
}

FiltrationReport filtrationOfPoints(const LatticePointSet& points, std::size_t latticeRank,
                                    std::optional<unsigned> maxDegree) {
  if (points.size() > kMaxPointCount)
    throw SizeExceeded(std::to_string(points.size()) + " points exceed the limit of " +
                       std::to_string(kMaxPointCount));
  FiltrationReport report;
  report.latticeRank = latticeRank;
  report.points = points;
  std::sort(report.points.begin(), report.points.end());
  report.pointCount = points.size();
  if (points.empty()) return report;
  for (const auto& z : points)
    if (z.size() != latticeRank) throw InvalidArgument("point of wrong dimension");

  const std::size_t n = report.pointCount;
  // Polynomials of degree n-1 already separate n points.
  const unsigned natural = static_cast<unsigned>(n - 1);
  const unsigned bound = maxDegree ? std::min(*maxDegree, natural) : natural;

  LatticeBuilder lattice(n);
  for (unsigned d = 0;; ++d) {
    for (const auto& e : exponentsOfDegree(latticeRank, d)) {
      auto v = binomialProductValues(e, report.points);
      if (!lattice.contains(v)) lattice.insert(v);
    }
    HermiteForm h;
    h.basis = lattice.basis();
    h.pivotRows = lattice.pivotRows();
    if (n <= kSmithDimensionCap) h.elementaryDivisors = elementaryDivisors(h.basis);
    IntMatrix sat = saturation(h.basis);
    report.saturationIndices.push_back(pivotProduct(h.basis, h.pivotRows) / pivotProduct(sat, pivotRowsOf(sat)));
    report.qDims.push_back(h.rank());
    report.grDims.push_back(h.rank() - (d == 0 ? 0 : report.qDims[d - 1]));
    report.zLatticeBases.push_back(std::move(h));
    report.integralBases.push_back(std::move(sat));
    if (report.qDims.back() == n) {
      report.topDegree = d;
      return report;
    }
    if (d >= bound)
      throw DegreeOverflow("filtration does not exhaust the functions by degree " + std::to_string(bound));
  }
}

FiltrationReport computeFiltration(const VectorArrangement& va, std::optional<unsigned> maxDegree) {
  auto tu = requireTotallyUnimodular(va);
  return filtrationOfPoints(interiorLatticePoints(tu), tu.rank(), maxDegree);
}

bool verifySaturation(const FiltrationReport& report) {
  return std::all_of(report.saturationIndices.begin(), report.saturationIndices.end(),
                     [](const Integer& i) { return i == 1; });
}

bool verifySaturation(const VectorArrangement& va) { return verifySaturation(computeFiltration(va)); }

std::vector<Integer> izHilbertSeries(const VectorArrangement& va) {
  return izHilbertSeries(tutteOfArrangement(va), va.size(), va.rank());
}

std::vector<Integer> izHilbertSeries(const BivariatePolynomial& t, std::size_t size, std::size_t rank) {
  const std::size_t n = size - rank;
  std::vector<Integer> coeffs(n + 1, Integer(0));
  for (const auto& [e, c] : t.terms()) {
    if (e.first != 0) continue;
    if (e.second > n) throw Error("Tutte polynomial has y-degree above the corank");
    coeffs[n - e.second] += c;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

bool GradedClass::isZero() const { return allZero(residue); }

GradedClass classOf(const FiltrationReport& report, unsigned degree, std::vector<Integer> values) {
  if (values.size() != report.pointCount) throw InvalidArgument("value vector has the wrong length");
  GradedClass c;
  c.degree = degree;
  if (report.empty()) {
    c.values = std::move(values);
    return c;
  }
  const IntMatrix eval = binomialEvaluationColumns(report, degree);
  if (auto x = solveIntegral(eval, values)) {
    for (auto& k : *x) c.representative.emplace_back(k);
  } else {
    std::vector<Rational> rhs(values.begin(), values.end());
    auto q = solveRational(toRational(eval), rhs);
    if (!q) throw InvalidArgument("function is not the restriction of a polynomial of degree " +
                                  std::to_string(degree));
    c.representative = std::move(*q);
  }
  c.residue = residueOf(report, degree, values);
  c.values = std::move(values);
  return c;
}

GradedClass coordinateClass(const FiltrationReport& report, std::size_t j) {
  if (j >= report.latticeRank) throw InvalidArgument("coordinate index out of range");
  std::vector<Integer> v;
  for (const auto& z : report.points) v.push_back(z[j]);
  return classOf(report, 1, std::move(v));
}

GradedClass multiply(const FiltrationReport& report, const GradedClass& a, const GradedClass& b) {
  std::vector<Integer> v(report.pointCount);
  for (std::size_t z = 0; z < v.size(); ++z) v[z] = a.values[z] * b.values[z];
  return classOf(report, a.degree + b.degree, std::move(v));
}

bool dividedPowerLawHolds(const FiltrationReport& report, const GradedClass& e, unsigned m) {
  std::vector<Integer> diff(report.pointCount);
  const Integer mf = factorial(m);
  for (std::size_t z = 0; z < diff.size(); ++z) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), e.values[z].get_mpz_t(), m);
    diff[z] = mf * binomial(e.values[z], m) - power;
  }
  if (allZero(diff)) return true;
  const long below = static_cast<long>(m * e.degree) - 1;
  return inColumnSpan(report.integralBasis(below), diff);
}

GradedClass dividedPower(const FiltrationReport& report, const GradedClass& e, unsigned m) {
  if (m == 1) return e;
  if (m == 0) return classOf(report, 0, std::vector<Integer>(report.pointCount, Integer(1)));
  if (e.degree == 0) throw InvalidArgument("divided powers are defined for classes of positive degree");
  const unsigned d = m * e.degree;
  if (d > report.topDegree)
    throw DegreeOverflow("degree " + std::to_string(d) + " exceeds the top degree " +
                         std::to_string(report.topDegree));
  std::vector<Integer> w(report.pointCount);
  for (std::size_t z = 0; z < w.size(); ++z) w[z] = binomial(e.values[z], m);
  if (!inColumnSpan(report.integralBasis(d), w))
    throw NotIntegral("binomial of a lift left the filtration piece of degree " + std::to_string(d));
  GradedClass result = classOf(report, d, std::move(w));
  if (!dividedPowerLawHolds(report, e, m)) throw Error("divided power law m! e^[m] = e^m failed");
  return result;
}

bool inSubringGeneratedBy(const FiltrationReport& report, std::span<const GradedClass> generators,
                          const GradedClass& target) {
  for (const auto& g : generators)
    if (g.degree == 0) throw InvalidArgument("subring generators must have positive degree");
  const unsigned d = target.degree;
  if (report.empty() || d > report.topDegree) return true;

  LatticeBuilder span(report.grDims[d]);
  std::vector<Integer> current(report.pointCount, Integer(1));
  std::function<void(std::size_t, unsigned)> extend = [&](std::size_t from, unsigned remaining) {
    if (remaining == 0) {
      span.insert(residueOf(report, d, current));
      return;
    }
    for (std::size_t k = from; k < generators.size(); ++k) {
      if (generators[k].degree > remaining) continue;
      auto saved = current;
      for (std::size_t z = 0; z < current.size(); ++z) current[z] *= generators[k].values[z];
      extend(k, remaining - generators[k].degree);
      current = std::move(saved);
    }
  };
  extend(0, d);
  return span.contains(target.residue);
}

bool dividedPowerGenerationCheck(const FiltrationReport& report) {
  if (report.empty() || report.topDegree == 0) return true;
  const IntMatrix eta = report.integralBasis(1);
  const std::size_t q = eta.cols();
  LatticeBuilder lattice(report.pointCount);
  for (unsigned d = 0; d <= report.topDegree; ++d) {
    for (const auto& e : exponentsOfDegree(q, d)) {
      std::vector<Integer> v(report.pointCount, Integer(1));
      for (std::size_t z = 0; z < v.size(); ++z)
        for (std::size_t k = 0; k < q && v[z] != 0; ++k) v[z] *= binomial(eta(z, k), e[k]);
      if (!lattice.contains(v)) lattice.insert(v);
    }
    if (!(lattice.basis() == report.zLatticeBases[d].basis)) return false;
  }
  return true;
}

bool DeletionContractionCheck::ok() const {
  return inclusion && bijection &&
         std::all_of(degrees.begin(), degrees.end(), [](const DegreeExactness& d) { return d.ok(); });
}

DeletionContractionCheck deletionContractionCheck(const VectorArrangement& va, std::size_t element) {
  auto tu = requireTotallyUnimodular(va);
  if (isLoop(tu, element) || isColoop(tu, element))
    throw LoopOrColoop("element " + tu.label(element) + " is a loop or a coloop");

  DeletionContractionCheck check;
  check.element = tu.label(element);
  const auto deleted = deletion(tu, element);
  const auto contracted = contractionWithProjection(tu, element);
  const auto points = interiorLatticePoints(tu);
  const auto delPoints = interiorLatticePoints(deleted);
  const auto conPoints = interiorLatticePoints(contracted.arrangement);
  check.pointCount = points.size();
  check.deletionPointCount = delPoints.size();
  check.contractionPointCount = conPoints.size();

  auto indexIn = [](const LatticePointSet& set, const LatticePoint& z) -> std::optional<std::size_t> {
    auto it = std::lower_bound(set.begin(), set.end(), z);
    if (it == set.end() || *it != z) return std::nullopt;
    return static_cast<std::size_t>(it - set.begin());
  };

  const auto shift = tu.vector(element);
  const std::size_t n = points.size();
  const std::size_t nDel = delPoints.size();
  const std::size_t nCon = conPoints.size();

  // Difference operator d g(z) = g(z + chi(a)) - g(z), rows indexed by Z(chi').
  IntMatrix partial(nDel, n);
  check.inclusion = true;
  for (std::size_t k = 0; k < nDel && check.inclusion; ++k) {
    auto self = indexIn(points, delPoints[k]);
    LatticePoint moved = delPoints[k];
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += shift[i];
    auto up = indexIn(points, moved);
    if (!self || !up) {
      check.inclusion = false;
      break;
    }
    partial(k, *up) += 1;
    partial(k, *self) -= 1;
  }

  // Pullback along the projection, columns indexed by Z(chi'').
  IntMatrix xi(n, nCon);
  check.bijection = true;
  std::vector<bool> hit(nCon, false);
  std::size_t outside = 0;
  for (std::size_t z = 0; z < n && check.bijection; ++z) {
    auto image = indexIn(conPoints, contracted.project(points[z]));
    if (!image) {
      check.bijection = false;
      break;
    }
    xi(z, *image) = 1;
    if (indexIn(delPoints, points[z])) continue;
    ++outside;
    if (hit[*image]) check.bijection = false;
    hit[*image] = true;
  }
  check.bijection = check.bijection && outside == nCon;

  const auto full = filtrationOfPoints(points, tu.rank());
  const auto del = filtrationOfPoints(delPoints, deleted.rank());
  const auto con = filtrationOfPoints(conPoints, contracted.arrangement.rank());
  const unsigned top = std::max({full.topDegree, con.topDegree, del.topDegree + 1});

  for (unsigned i = 0; i <= top; ++i) {
    DegreeExactness d;
    d.degree = i;
    d.dim = full.qDim(i);
    d.contractionDim = con.qDim(i);
    d.deletionDim = del.qDim(static_cast<long>(i) - 1);
    d.dimensionIdentity = d.dim == d.contractionDim + d.deletionDim;
    if (check.inclusion && check.bijection) {
      const IntMatrix b = full.integralBasis(i);
      const IntMatrix bCon = con.integralBasis(i);
      const IntMatrix bDel = del.integralBasis(static_cast<long>(i) - 1);
      const IntMatrix image = xi * bCon;
      const IntMatrix diff = partial * b;
      const std::size_t rankXi = rank(image);
      const std::size_t rankDiff = rank(diff);
      const bool xiLands = rankOfUnion(b, image) == d.dim;
      const bool diffLands = rankOfUnion(bDel, diff) == d.deletionDim;
      d.xiInjective = xiLands && rankXi == d.contractionDim;
      d.partialSurjective = diffLands && rankDiff == d.deletionDim;
      const bool composite = allZero((partial * image).entries());
      d.exactOverQ = d.xiInjective && d.partialSurjective && composite && rankXi + rankDiff == d.dim;
      // Over Z: ker(d) on R_i(Z) equals xi(R_i(chi''; Z)) and d(R_i(Z)) = R_(i-1)(chi'; Z).
      const IntMatrix kernel = b * integerKernel(diff);
      d.exactOverZ = d.exactOverQ && hermiteBasis(kernel) == hermiteBasis(image) &&
                     hermiteBasis(diff) == hermiteBasis(bDel);
    }
    check.degrees.push_back(d);
  }
  return check;
}

DeletionContractionCheck deletionContractionCheck(const VectorArrangement& va, std::string_view label) {
  return deletionContractionCheck(va, va.indexOf(label));
}

std::vector<ReesPiece> reesData(const FiltrationReport& report) {
  std::vector<ReesPiece> pieces;
  if (report.empty()) return pieces;
  for (unsigned i = 0; i <= report.topDegree; ++i)
    pieces.push_back(ReesPiece{i, 2 * i, report.integralBases[i]});
  return pieces;
}

} // namespace zonotopal
