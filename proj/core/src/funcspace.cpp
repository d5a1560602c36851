#include "zonotopal/funcspace.hpp"

#include "zonotopal/errors.hpp"

namespace zonotopal {

namespace {

void compositions(std::size_t r, unsigned remaining, std::size_t pos, std::vector<unsigned>& cur,
                  std::vector<std::vector<unsigned>>& out) {
  if (pos + 1 == r) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    cur[pos] = k;
    compositions(r, remaining - k, pos + 1, cur, out);
  }
}

unsigned sum(const std::vector<unsigned>& v) {
  unsigned s = 0;
  for (auto k : v) s += k;
  return s;
}

template <class Function>
EvaluationMatrix<Function> evaluateAll(std::span<const Function> basis, const LatticePointSet& points) {
  if (points.empty()) throw EmptyPointSet("cannot evaluate on an empty point set");
  EvaluationMatrix<Function> e;
  e.functions.assign(basis.begin(), basis.end());
  e.points = points;
  e.values = IntMatrix(basis.size(), points.size());
  for (std::size_t f = 0; f < basis.size(); ++f)
    for (std::size_t z = 0; z < points.size(); ++z) e.values(f, z) = basis[f].evaluate(points[z]);
  return e;
}

} // namespace

std::vector<std::vector<unsigned>> exponentsOfDegree(std::size_t r, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  if (r == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> cur(r, 0);
  compositions(r, d, 0, cur, out);
  return out;
}

unsigned Monomial::degree() const { return sum(exponents); }

Integer Monomial::evaluate(std::span<const Integer> z) const {
  Integer v = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), z[i].get_mpz_t(), exponents[i]);
    v *= p;
  }
  return v;
}

Polynomial Monomial::polynomial() const {
  Polynomial p(exponents.size());
  p += Polynomial::constant(exponents.size(), 1);
  for (std::size_t i = 0; i < exponents.size(); ++i) p = p * Polynomial::variable(exponents.size(), i).pow(exponents[i]);
  return p;
}

unsigned BinomialProduct::degree() const { return sum(perCoordinate); }

Integer BinomialProduct::evaluate(std::span<const Integer> z) const {
  Integer v = 1;
  for (std::size_t i = 0; i < perCoordinate.size() && v != 0; ++i) v *= binomial(z[i], perCoordinate[i]);
  return v;
}

Polynomial BinomialProduct::polynomial() const {
  const std::size_t r = perCoordinate.size();
  Polynomial p = Polynomial::constant(r, 1);
  for (std::size_t i = 0; i < r; ++i)
    p = p * Polynomial::binomialOf(Polynomial::variable(r, i), perCoordinate[i]);
  return p;
}

std::vector<Monomial> monomialsOfDegree(std::size_t r, unsigned d) {
  std::vector<Monomial> out;
  for (auto& e : exponentsOfDegree(r, d)) out.push_back(Monomial{std::move(e)});
  return out;
}

std::vector<Monomial> monomialsUpTo(std::size_t r, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned k = 0; k <= d; ++k)
    for (auto& e : exponentsOfDegree(r, k)) out.push_back(Monomial{std::move(e)});
  return out;
}

std::vector<BinomialProduct> binomialProductsUpTo(std::size_t r, unsigned d) {
  std::vector<BinomialProduct> out;
  for (unsigned k = 0; k <= d; ++k)
    for (auto& e : exponentsOfDegree(r, k)) out.push_back(BinomialProduct{std::move(e)});
  return out;
}

EvaluationMatrix<Monomial> evaluate(std::span<const Monomial> basis, const LatticePointSet& points) {
  return evaluateAll(basis, points);
}

EvaluationMatrix<BinomialProduct> evaluate(std::span<const BinomialProduct> basis, const LatticePointSet& points) {
  return evaluateAll(basis, points);
}

std::vector<Integer> evaluateShiftedBinomial(std::span<const Integer> alpha, const Integer& shift, unsigned m,
                                             const LatticePointSet& points) {
  std::vector<Integer> out;
  out.reserve(points.size());
  for (const auto& z : points) out.push_back(binomial(pairing(alpha, z) + shift, m));
  return out;
}

} // namespace zonotopal
