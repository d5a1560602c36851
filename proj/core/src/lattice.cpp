#include "zonotopal/lattice.hpp"

#include <algorithm>
#include <utility>

#include "zonotopal/errors.hpp"

namespace zonotopal {

namespace {

std::optional<std::size_t> leadingRow(std::span<const Integer> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return i;
  return std::nullopt;
}

// Euclidean step on a column pair so that afterwards x[p] = gcd and y[p] = 0.
// Applies the same unimodular 2x2 transform to (xs, ys).
void gcdCombine(std::vector<Integer>& x, std::vector<Integer>& y, std::size_t p) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x[p].get_mpz_t(), y[p].get_mpz_t());
  Integer xq = x[p] / g;
  Integer yq = y[p] / g;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Integer nx = s * x[i] + t * y[i];
    Integer ny = xq * y[i] - yq * x[i];
    x[i] = std::move(nx);
    y[i] = std::move(ny);
  }
}

Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

LatticeBuilder::LatticeBuilder(std::size_t ambientDimension) : ambient_(ambientDimension) {}

void LatticeBuilder::insert(std::span<const Integer> in) {
  assert(in.size() == ambient_);
  std::vector<Integer> v(in.begin(), in.end());
  std::size_t idx = 0;
  while (true) {
    auto lead = leadingRow(v);
    if (!lead) break;
    const std::size_t p = *lead;
    while (idx < columns_.size() && pivots_[idx] < p) ++idx;
    if (idx == columns_.size() || pivots_[idx] > p) {
      columns_.insert(columns_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
      pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(idx), p);
      break;
    }
    gcdCombine(columns_[idx], v, p);
    ++idx;
  }
  normalize();
}

void LatticeBuilder::insertColumns(const IntMatrix& generators) {
  assert(generators.rows() == ambient_ || generators.cols() == 0);
  for (std::size_t j = 0; j < generators.cols(); ++j) insert(generators.column(j));
}

void LatticeBuilder::normalize() {
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    auto& col = columns_[j];
    const std::size_t p = pivots_[j];
    if (col[p] < 0)
      for (auto& x : col) x = -x;
    for (std::size_t k = 0; k < j; ++k) {
      auto& left = columns_[k];
      if (left[p] >= 0 && left[p] < col[p]) continue;
      Integer q = floorDiv(left[p], col[p]);
      for (std::size_t i = p; i < ambient_; ++i) left[i] -= q * col[i];
    }
  }
}

bool LatticeBuilder::contains(std::span<const Integer> in) const {
  assert(in.size() == ambient_);
  std::vector<Integer> v(in.begin(), in.end());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    const std::size_t p = pivots_[j];
    for (std::size_t i = 0; i < p; ++i)
      if (v[i] != 0) return false;
    if (v[p] == 0) continue;
    if (!mpz_divisible_p(v[p].get_mpz_t(), columns_[j][p].get_mpz_t())) return false;
    Integer q = v[p] / columns_[j][p];
    for (std::size_t i = p; i < ambient_; ++i) v[i] -= q * columns_[j][i];
  }
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix LatticeBuilder::basis() const { return IntMatrix::fromColumns(ambient_, columns_); }

IntMatrix hermiteBasis(const IntMatrix& generators) {
  LatticeBuilder b(generators.rows());
  b.insertColumns(generators);
  return b.basis();
}

HermiteForm hermiteNormalForm(const IntMatrix& generators) {
  LatticeBuilder b(generators.rows());
  b.insertColumns(generators);
  HermiteForm h;
  h.basis = b.basis();
  h.pivotRows = b.pivotRows();
  h.elementaryDivisors = elementaryDivisors(h.basis);
  return h;
}

std::vector<Integer> elementaryDivisors(const IntMatrix& m) {
  if (std::max(m.rows(), m.cols()) > kSmithDimensionCap)
    throw SizeExceeded("Smith normal form limited to matrices of dimension <= " +
                       std::to_string(kSmithDimensionCap));
  IntMatrix a = m;
  const std::size_t n = a.rows();
  const std::size_t k = a.cols();
  std::vector<Integer> divisors;
  for (std::size_t t = 0; t < std::min(n, k); ++t) {
    bool done = false;
    while (!done) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = n, pj = k;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < k; ++j)
          if (a(i, j) != 0 && (pi == n || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == n) return divisors;
      if (pi != t)
        for (std::size_t j = 0; j < k; ++j) std::swap(a(pi, j), a(t, j));
      if (pj != t)
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, pj), a(i, t));

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < k; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < n; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      done = true;
      for (std::size_t i = t + 1; i < n && done; ++i)
        for (std::size_t j = t + 1; j < k; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t c = t; c < k; ++c) a(t, c) += a(i, c);
            done = false;
            break;
          }
    }
    divisors.push_back(abs(a(t, t)));
  }
  return divisors;
}

Integer saturationIndex(const IntMatrix& sublattice, std::size_t ambientRank) {
  if (sublattice.cols() > 0 && sublattice.rows() != ambientRank)
    throw InvalidArgument("sublattice generators must live in Z^" + std::to_string(ambientRank));
  IntMatrix basis = hermiteBasis(sublattice);
  Integer index = 1;
  for (const auto& d : elementaryDivisors(basis)) index *= d;
  return index;
}

HermiteDecomposition hermiteWithTransform(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  // Work column-wise: col[j] holds column j of a stacked over column j of the transform.
  std::vector<std::vector<Integer>> col(m, std::vector<Integer>(n + m, Integer(0)));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[j][i] = a(i, j);
    col[j][n + j] = 1;
  }
  std::vector<std::size_t> pivots;
  std::size_t c = 0;
  for (std::size_t p = 0; p < n && c < m; ++p) {
    for (std::size_t j = c + 1; j < m; ++j) {
      if (col[j][p] == 0) continue;
      if (col[c][p] == 0) {
        std::swap(col[c], col[j]);
        continue;
      }
      gcdCombine(col[c], col[j], p);
    }
    if (col[c][p] == 0) continue;
    if (col[c][p] < 0)
      for (auto& x : col[c]) x = -x;
    for (std::size_t k = 0; k < c; ++k) {
      if (col[k][p] >= 0 && col[k][p] < col[c][p]) continue;
      Integer q = floorDiv(col[k][p], col[c][p]);
      for (std::size_t i = 0; i < n + m; ++i) col[k][i] -= q * col[c][i];
    }
    pivots.push_back(p);
    ++c;
  }
  HermiteDecomposition d;
  d.rank = c;
  d.pivotRows = std::move(pivots);
  d.hermite = IntMatrix(n, m);
  d.transform = IntMatrix(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) d.hermite(i, j) = col[j][i];
    for (std::size_t i = 0; i < m; ++i) d.transform(i, j) = col[j][n + i];
  }
  return d;
}

IntMatrix integerKernel(const IntMatrix& a) {
  const std::size_t m = a.cols();
  if (a.rows() == 0) return IntMatrix::identity(m);
  auto d = hermiteWithTransform(a);
  std::vector<std::size_t> tail;
  for (std::size_t j = d.rank; j < m; ++j) tail.push_back(j);
  return hermiteBasis(d.transform.selectColumns(tail));
}

IntMatrix saturation(const IntMatrix& generators) {
  const std::size_t n = generators.rows();
  if (generators.cols() == 0) return IntMatrix(n, 0);
  IntMatrix orth = integerKernel(generators.transpose());
  if (orth.cols() == 0) return IntMatrix::identity(n);
  return integerKernel(orth.transpose());
}

std::optional<std::vector<Integer>> solveIntegral(const IntMatrix& a, std::span<const Integer> b) {
  assert(b.size() == a.rows());
  auto d = hermiteWithTransform(a);
  std::vector<Integer> y(d.rank);
  for (std::size_t j = 0; j < d.rank; ++j) {
    const std::size_t p = d.pivotRows[j];
    Integer rhs = b[p];
    for (std::size_t k = 0; k < j; ++k) rhs -= d.hermite(p, k) * y[k];
    if (!mpz_divisible_p(rhs.get_mpz_t(), d.hermite(p, j).get_mpz_t())) return std::nullopt;
    y[j] = rhs / d.hermite(p, j);
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < d.rank; ++j) s += d.hermite(i, j) * y[j];
    if (s != b[i]) return std::nullopt;
  }
  std::vector<Integer> x(a.cols(), Integer(0));
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < d.rank; ++j) x[i] += d.transform(i, j) * y[j];
  return x;
}

} // namespace zonotopal
