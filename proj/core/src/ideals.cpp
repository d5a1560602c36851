#include "zonotopal/ideals.hpp"

#include <map>

#include "zonotopal/errors.hpp"
#include "zonotopal/funcspace.hpp"
#include "zonotopal/linalg.hpp"

namespace zonotopal {

namespace {

std::string describe(const IdealGenerator& g) {
  const auto& alpha = g.cocircuit.covector;
  if (g.kind == IdealGenerator::Kind::binomialShift)
    return "binom(" + linearFormToString(alpha, g.shift()) + ", " + std::to_string(g.degree) + ")";
  std::string base = "(" + linearFormToString(alpha) + ")";
  if (g.degree == 0) return "1";
  std::string s = g.degree == 1 ? base : base + "^" + std::to_string(g.degree);
  if (g.degree > 1) s += "/" + factorial(g.degree).get_str();
  return s;
}

std::vector<IdealGenerator> generatorsOf(std::span<const Cocircuit> cocircuits, IdealGenerator::Kind kind) {
  std::vector<IdealGenerator> out;
  for (const auto& c : cocircuits) {
    IdealGenerator g;
    g.kind = kind;
    g.cocircuit = c;
    g.degree = static_cast<unsigned>(c.d() - 1);
    g.closedForm = describe(g);
    out.push_back(std::move(g));
  }
  return out;
}

// Column index of every monomial of degree <= d (or exactly d).
struct MonomialIndex {
  std::map<std::vector<unsigned>, std::size_t> index;

  MonomialIndex(std::size_t r, unsigned d, bool homogeneous) {
    for (unsigned k = homogeneous ? d : 0; k <= d; ++k)
      for (auto& e : exponentsOfDegree(r, k)) index.emplace(std::move(e), index.size());
  }

  std::vector<Rational> coordinates(const Polynomial& p) const {
    std::vector<Rational> v(index.size());
    for (const auto& [e, c] : p.terms()) v.at(index.at(e)) = c;
    return v;
  }
};

std::size_t symmetricPowerDimension(std::size_t r, unsigned d) {
  if (r == 0) return d == 0 ? 1 : 0;
  Integer n = binomial(Integer(static_cast<unsigned long>(r + d - 1)), d);
  if (n > kMaxSymmetricPowerDimension)
    throw SizeExceeded("Sym^" + std::to_string(d) + " has dimension above " +
                       std::to_string(kMaxSymmetricPowerDimension));
  return n.get_ui();
}

} // namespace

Integer IdealGenerator::shift() const {
  if (kind == Kind::purePower) return 0;
  return Integer(static_cast<unsigned long>(cocircuit.dMinus)) - 1;
}

Polynomial IdealGenerator::polynomial() const {
  const auto& alpha = cocircuit.covector;
  if (kind == Kind::binomialShift) return Polynomial::binomialOf(Polynomial::linear(alpha, shift()), degree);
  return Polynomial::linear(alpha).pow(degree) * Rational(1, factorial(degree));
}

Integer IdealGenerator::evaluate(std::span<const Integer> z) const {
  if (kind == Kind::binomialShift) return binomial(pairing(cocircuit.covector, z) + shift(), degree);
  Rational v = polynomial().evaluate(z);
  if (v.get_den() != 1) throw NotIntegral("pure power generator is not integral at this point");
  return v.get_num();
}

std::vector<IdealGenerator> kMinusGenerators(std::span<const Cocircuit> cocircuits) {
  return generatorsOf(cocircuits, IdealGenerator::Kind::binomialShift);
}

std::vector<IdealGenerator> kMinusGenerators(const VectorArrangement& va) {
  auto c = enumerateCocircuits(va);
  return kMinusGenerators(c);
}

std::vector<IdealGenerator> iMinusGenerators(std::span<const Cocircuit> cocircuits) {
  return generatorsOf(cocircuits, IdealGenerator::Kind::purePower);
}

std::vector<IdealGenerator> iMinusGenerators(const VectorArrangement& va) {
  auto c = enumerateCocircuits(va);
  return iMinusGenerators(c);
}

bool verifyVanishing(std::span<const IdealGenerator> generators, const LatticePointSet& points) {
  for (const auto& g : generators) {
    if (g.kind != IdealGenerator::Kind::binomialShift) continue;
    for (const auto& z : points)
      if (g.evaluate(z) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> powerIdealQuotientDims(const VectorArrangement& va, std::optional<unsigned> maxDegree) {
  const std::size_t r = va.rank();
  const unsigned bound = maxDegree ? *maxDegree : static_cast<unsigned>(va.size() - r + 1);
  const auto cocircuits = enumerateCocircuits(va);
  std::vector<Polynomial> powers;
  std::vector<unsigned> powerDegrees;
  for (const auto& c : cocircuits) {
    const auto k = static_cast<unsigned>(c.d() - 1);
    powers.push_back(Polynomial::linear(c.covector).pow(k));
    powerDegrees.push_back(k);
  }

  std::vector<std::size_t> dims;
  for (unsigned d = 0; d <= bound; ++d) {
    const std::size_t total = symmetricPowerDimension(r, d);
    const MonomialIndex columns(r, d, true);
    RationalEchelon span;
    for (std::size_t g = 0; g < powers.size() && span.rank() < total; ++g) {
      if (powerDegrees[g] > d) continue;
      for (const auto& m : monomialsOfDegree(r, d - powerDegrees[g])) {
        span.insert(columns.coordinates(m.polynomial() * powers[g]));
        if (span.rank() == total) break;
      }
    }
    dims.push_back(total - span.rank());
  }
  return dims;
}

std::vector<std::size_t> redundantGenerators(std::span<const IdealGenerator> generators, std::size_t latticeRank) {
  std::vector<std::size_t> redundant;
  for (std::size_t t = 0; t < generators.size(); ++t) {
    const auto& target = generators[t];
    const bool homogeneous = target.kind == IdealGenerator::Kind::purePower;
    const unsigned d = target.degree;
    const MonomialIndex columns(latticeRank, d, homogeneous);
    RationalEchelon span;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (g == t || generators[g].degree > d) continue;
      const Polynomial p = generators[g].polynomial();
      const unsigned room = d - generators[g].degree;
      auto multipliers = homogeneous ? monomialsOfDegree(latticeRank, room) : monomialsUpTo(latticeRank, room);
      for (const auto& m : multipliers) span.insert(columns.coordinates(m.polynomial() * p));
    }
    if (span.contains(columns.coordinates(target.polynomial()))) redundant.push_back(t);
  }
  return redundant;
}

} // namespace zonotopal
