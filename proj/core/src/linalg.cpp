#include "zonotopal/linalg.hpp"

#include <algorithm>
#include <utility>

namespace zonotopal {

namespace {

// In-place Bareiss; returns the rank. Every division is exact.
std::size_t bareissRank(IntMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) continue;
    if (p != r)
      for (std::size_t j = 0; j < m; ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < m; ++j) {
        a(i, j) = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

IntMatrix clearDenominators(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rational scaled = m(i, j) * l;
      out(i, j) = scaled.get_num();
    }
  }
  return out;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return bareissRank(a);
}

std::size_t rank(const RatMatrix& m) {
  IntMatrix a = clearDenominators(m);
  return bareissRank(a);
}

Integer determinant(const IntMatrix& square) {
  assert(square.rows() == square.cols());
  const std::size_t n = square.rows();
  if (n == 0) return 1;
  IntMatrix a = square;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatMatrix kernelBasis(const RatMatrix& m) {
  RatMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> isPivot(m.cols(), false);
  for (auto c : pivots) isPivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (isPivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, f);
    basis.push_back(std::move(v));
  }
  return RatMatrix::fromColumns(m.cols(), basis);
}

std::optional<std::vector<Rational>> solveRational(const RatMatrix& m, std::span<const Rational> b) {
  assert(b.size() == m.rows());
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, m.cols());
  return x;
}

bool inColumnSpan(const IntMatrix& m, std::span<const Integer> v) {
  assert(v.size() == m.rows() || m.cols() == 0);
  const std::size_t base = rank(m);
  IntMatrix ext(v.size(), m.cols() + 1);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) ext(i, j) = m(i, j);
    ext(i, m.cols()) = v[i];
  }
  return rank(ext) == base;
}

void RationalEchelon::reduce(std::vector<Rational>& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (v[pivots_[k]] == 0) continue;
    Rational f = v[pivots_[k]];
    for (std::size_t i = pivots_[k]; i < v.size(); ++i) v[i] -= f * rows_[k][i];
  }
}

bool RationalEchelon::insert(std::vector<Rational> v) {
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (lead == v.end()) return false;
  const auto p = static_cast<std::size_t>(lead - v.begin());
  Rational inv = 1 / v[p];
  for (auto& x : v) x *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RationalEchelon::contains(std::vector<Rational> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

} // namespace zonotopal
