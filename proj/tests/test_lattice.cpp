#include <doctest.h>

#include "support.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/funcspace.hpp"
#include "zonotopal/lattice.hpp"

using namespace testing;

namespace {

IntMatrix diag(long a, long b) { return IntMatrix(2, 2, ints({a, 0, 0, b})); }

// Elementary divisors from gcds of minors: d_1 ... d_k = gcd of k x k minors.
std::vector<Integer> divisorsByMinors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    Integer g = minorGcd(m, k);
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

void checkHermiteShape(const HermiteForm& h) {
  for (std::size_t j = 0; j < h.rank(); ++j) {
    const auto p = h.pivotRows[j];
    if (j > 0) CHECK(p > h.pivotRows[j - 1]);
    CHECK(h.basis(p, j) > 0);
    for (std::size_t i = 0; i < p; ++i) CHECK(h.basis(i, j) == 0);
    for (std::size_t k = 0; k < j; ++k) {
      CHECK(h.basis(p, k) >= 0);
      CHECK(h.basis(p, k) < h.basis(p, j));
    }
  }
  for (std::size_t k = 1; k < h.elementaryDivisors.size(); ++k)
    CHECK(h.elementaryDivisors[k] % h.elementaryDivisors[k - 1] == 0);
}

}  // namespace

TEST_CASE("elementary divisor examples") {
  CHECK(hermiteNormalForm(diag(2, 3)).elementaryDivisors == ints({1, 6}));
  CHECK(hermiteNormalForm(IntMatrix::identity(4)).elementaryDivisors == ints({1, 1, 1, 1}));
}

TEST_CASE("saturation index examples") {
  CHECK(saturationIndex(diag(2, 1), 2) == 2);
  CHECK(saturationIndex(diag(1, 1), 2) == 1);
  CHECK(saturationIndex(IntMatrix(2, 1, ints({2, 4})), 2) == 2);
  CHECK_THROWS_AS(saturationIndex(IntMatrix(3, 1), 2), InvalidArgument);
}

TEST_CASE("Smith form agrees with gcd of minors on random matrices") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + drawBelow(rng, 4), c = 1 + drawBelow(rng, 4);
    IntMatrix m = randomMatrix(rng, r, c, -6, 6);
    CHECK(elementaryDivisors(m) == divisorsByMinors(m));
  }
}

TEST_CASE("HNF shape, idempotence and lattice equality") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + drawBelow(rng, 4), c = 1 + drawBelow(rng, 6);
    IntMatrix m = randomMatrix(rng, r, c, -9, 9);
    auto h = hermiteNormalForm(m);
    checkHermiteShape(h);
    CHECK(hermiteNormalForm(h.basis) == h);
    CHECK(h.rank() == rank(m));
    // Same lattice after a unimodular column change.
    IntMatrix mixed = m * randomUnimodular(rng, c);
    CHECK(hermiteBasis(mixed) == h.basis);
    // Every generator is a member.
    LatticeBuilder b(r);
    b.insertColumns(m);
    for (std::size_t j = 0; j < c; ++j) CHECK(b.contains(m.column(j)));
  }
}

TEST_CASE("saturation index is 1 exactly when the elementary divisors are all 1") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + drawBelow(rng, 4), c = 1 + drawBelow(rng, 4);
    IntMatrix m = randomMatrix(rng, r, c, -3, 3);
    const auto d = elementaryDivisors(m);
    const bool allOne = std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
    CHECK((saturationIndex(m, r) == 1) == allOne);
  }
}

TEST_CASE("integer kernel and saturation") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + drawBelow(rng, 3), c = 1 + drawBelow(rng, 5);
    IntMatrix m = randomMatrix(rng, r, c, -4, 4);
    IntMatrix k = integerKernel(m);
    CHECK(k.cols() == c - rank(m));
    const IntMatrix mk = m * k;
    for (const auto& x : mk.entries()) CHECK(x == 0);
    if (k.cols() > 0) CHECK(saturationIndex(k, c) == 1);

    IntMatrix s = saturation(m);
    CHECK(rank(s) == rank(m));
    CHECK(saturationIndex(s, r) == 1);
    LatticeBuilder sat(r);
    sat.insertColumns(s);
    for (std::size_t j = 0; j < c; ++j) CHECK(sat.contains(m.column(j)));
    // [S : L] is the product of the elementary divisors of L.
    if (rank(m) > 0) {
      Integer index = 1;
      for (const auto& d : elementaryDivisors(m)) index *= d;
      CHECK(saturationIndex(m, r) == index);
    }
  }
}

TEST_CASE("integral solve") {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 30; ++t) {
    IntMatrix a = randomMatrix(rng, 3, 4, -3, 3);
    std::vector<Integer> x{Integer(1), Integer(-2), Integer(0), Integer(3)};
    auto b = a * std::span<const Integer>(x);
    auto y = solveIntegral(a, b);
    REQUIRE(y);
    CHECK(a * std::span<const Integer>(*y) == b);
  }
  CHECK_FALSE(solveIntegral(IntMatrix(1, 1, ints({2})), ints({1})));
  CHECK_FALSE(solveIntegral(IntMatrix(2, 1, ints({1, 1})), ints({1, 2})));
}

TEST_CASE("hermite decomposition satisfies a U = H with U unimodular") {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 20; ++t) {
    IntMatrix a = randomMatrix(rng, 3, 5, -5, 5);
    auto d = hermiteWithTransform(a);
    CHECK(a * d.transform == d.hermite);
    Integer det = determinant(d.transform);
    CHECK(abs(det) == 1);
  }
}

TEST_CASE("Smith dimension cap") {
  CHECK_THROWS_AS(elementaryDivisors(IntMatrix(kSmithDimensionCap + 1, 1)), SizeExceeded);
}

// Degree-1 integer-valued functions restricted to the house points: the
// lattice spanned by 1, x1, x2 is saturated in Z^6.
TEST_CASE("house degree-1 evaluation lattice has trivial elementary divisors") {
  auto points = interiorLatticePoints(houseArrangement());
  auto basis = binomialProductsUpTo(2, 1);
  auto e = evaluate(std::span<const BinomialProduct>(basis), points);
  CHECK(divisorsByMinors(e.values) == ints({1, 1, 1}));
  CHECK(hermiteNormalForm(e.values.transpose()).elementaryDivisors == ints({1, 1, 1}));
}
