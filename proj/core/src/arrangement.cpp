#include "zonotopal/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "zonotopal/errors.hpp"
#include "zonotopal/lattice.hpp"
#include "zonotopal/linalg.hpp"

namespace zonotopal {

namespace {

// Calls visit(indices) for each k-subset of {0..n-1} in lexicographic order;
// stops early when visit returns false.
bool forEachSubset(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void makePrimitiveCanonical(Covector& v) {
  Integer g = contentOf(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  auto first = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
  if (first != v.end() && *first < 0)
    for (auto& x : v) x = -x;
}

std::vector<std::size_t> allBut(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n; ++j)
    if (j != skip) out.push_back(j);
  return out;
}

} // namespace

VectorArrangement::VectorArrangement(std::size_t latticeRank, std::vector<std::string> labels, IntMatrix columns,
                                     bool totallyUnimodular)
    : rank_(latticeRank), labels_(std::move(labels)), columns_(std::move(columns)), totallyUnimodular_(totallyUnimodular) {
  if (columns_.cols() != labels_.size())
    throw InvalidArgument("arrangement needs one column per label");
  if (columns_.cols() > 0 && columns_.rows() != rank_)
    throw InvalidArgument("arrangement columns must have " + std::to_string(rank_) + " entries");
  if (columns_.cols() == 0) columns_ = IntMatrix(rank_, 0);
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw InvalidArgument("arrangement labels must be distinct");
  if (zonotopal::rank(columns_) != rank_)
    throw InvalidArgument("arrangement columns do not span a rank-" + std::to_string(rank_) + " space");
}

std::size_t VectorArrangement::indexOf(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidArgument("unknown element '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

VectorArrangement VectorArrangement::markedAsTotallyUnimodular() const {
  VectorArrangement copy = *this;
  copy.totallyUnimodular_ = true;
  return copy;
}

std::optional<Minor> findNonUnimodularMinor(const VectorArrangement& va) {
  const std::size_t r = va.rank();
  const std::size_t n = va.size();
  if (r > kMaxRankForUnimodularityCheck || n > kMaxSizeForUnimodularityCheck)
    throw SizeExceeded("total unimodularity check limited to rank <= " +
                       std::to_string(kMaxRankForUnimodularityCheck) + " and <= " +
                       std::to_string(kMaxSizeForUnimodularityCheck) + " elements");
  const IntMatrix& x = va.columns();
  std::optional<Minor> bad;
  for (std::size_t k = 1; k <= std::min(r, n) && !bad; ++k) {
    forEachSubset(r, k, [&](const std::vector<std::size_t>& rows) {
      IntMatrix sub = x.selectRows(rows);
      return forEachSubset(n, k, [&](const std::vector<std::size_t>& cols) {
        Integer det = determinant(sub.selectColumns(cols));
        if (det >= -1 && det <= 1) return true;
        bad = Minor{rows, cols, det};
        return false;
      });
    });
  }
  return bad;
}

bool isTotallyUnimodular(const VectorArrangement& va) { return !findNonUnimodularMinor(va).has_value(); }

VectorArrangement requireTotallyUnimodular(const VectorArrangement& va) {
  if (va.markedTotallyUnimodular()) return va;
  if (auto minor = findNonUnimodularMinor(va)) {
    std::string what = "minor on coordinates {";
    for (std::size_t i = 0; i < minor->rows.size(); ++i) what += (i ? "," : "") + std::to_string(minor->rows[i] + 1);
    what += "} and elements {";
    for (std::size_t i = 0; i < minor->cols.size(); ++i) what += (i ? "," : "") + va.label(minor->cols[i]);
    what += "} has determinant " + minor->determinant.get_str();
    throw NotTotallyUnimodular(what, minor->rows, minor->cols, minor->determinant);
  }
  return va.markedAsTotallyUnimodular();
}

bool isLoop(const VectorArrangement& va, std::size_t element) {
  for (std::size_t i = 0; i < va.rank(); ++i)
    if (va.columns()(i, element) != 0) return false;
  return true;
}

bool isColoop(const VectorArrangement& va, std::size_t element) {
  auto rest = allBut(va.size(), element);
  return rank(va.columns().selectColumns(rest)) < va.rank();
}

LoopsAndColoops loopsAndColoops(const VectorArrangement& va) {
  LoopsAndColoops lc;
  for (std::size_t a = 0; a < va.size(); ++a) {
    if (isLoop(va, a)) lc.loops.push_back(a);
    if (isColoop(va, a)) lc.coloops.push_back(a);
  }
  return lc;
}

VectorArrangement deletion(const VectorArrangement& va, std::size_t element) {
  if (element >= va.size()) throw InvalidArgument("element index out of range");
  if (isColoop(va, element)) throw IsColoop("cannot delete coloop '" + va.label(element) + "'");
  auto rest = allBut(va.size(), element);
  std::vector<std::string> labels;
  for (auto j : rest) labels.push_back(va.label(j));
  return VectorArrangement(va.rank(), std::move(labels), va.columns().selectColumns(rest), va.markedTotallyUnimodular());
}

VectorArrangement deletion(const VectorArrangement& va, std::string_view label) { return deletion(va, va.indexOf(label)); }

LatticePoint Contraction::project(std::span<const Integer> z) const { return projection * z; }

Contraction contractionWithProjection(const VectorArrangement& va, std::size_t element) {
  if (element >= va.size()) throw InvalidArgument("element index out of range");
  if (isLoop(va, element)) throw IsLoop("cannot contract loop '" + va.label(element) + "'");
  const std::size_t r = va.rank();
  IntMatrix row(1, r);
  for (std::size_t i = 0; i < r; ++i) row(0, i) = va.columns()(i, element);
  // row * W = (g, 0, ..., 0); the last r-1 rows of W^T annihilate chi(a) and
  // complete it to a basis when g = 1.
  auto d = hermiteWithTransform(row);
  if (d.hermite(0, 0) != 1)
    throw NotTotallyUnimodular("contracted vector of '" + va.label(element) + "' is not primitive");
  IntMatrix projection(r - 1, r);
  for (std::size_t i = 1; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) projection(i - 1, j) = d.transform(j, i);

  auto rest = allBut(va.size(), element);
  std::vector<std::string> labels;
  for (auto j : rest) labels.push_back(va.label(j));
  IntMatrix cols = projection * va.columns().selectColumns(rest);
  return {VectorArrangement(r - 1, std::move(labels), std::move(cols), va.markedTotallyUnimodular()),
          std::move(projection)};
}

VectorArrangement contraction(const VectorArrangement& va, std::size_t element) {
  return contractionWithProjection(va, element).arrangement;
}

VectorArrangement contraction(const VectorArrangement& va, std::string_view label) {
  return contraction(va, va.indexOf(label));
}

Cocircuit Cocircuit::opposite() const {
  Cocircuit c = *this;
  for (auto& x : c.covector) x = -x;
  for (auto& v : c.values) v = -v;
  std::swap(c.dPlus, c.dMinus);
  return c;
}

Integer pairing(std::span<const Integer> alpha, std::span<const Integer> z) {
  assert(alpha.size() == z.size());
  Integer s = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) s += alpha[i] * z[i];
  return s;
}

std::vector<Cocircuit> enumerateCocircuits(const VectorArrangement& va) {
  const std::size_t r = va.rank();
  const std::size_t n = va.size();
  std::vector<Cocircuit> out;
  if (r == 0) return out;
  const IntMatrix& x = va.columns();

  std::set<Covector> seen;
  forEachSubset(n, r - 1, [&](const std::vector<std::size_t>& hyper) {
    IntMatrix sub = x.selectColumns(hyper);
    if (rank(sub) != r - 1) return true;
    RatMatrix k = kernelBasis(toRational(sub.transpose()));
    assert(k.cols() == 1);
    Integer den = 1;
    for (std::size_t i = 0; i < r; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), k(i, 0).get_den_mpz_t());
    Covector alpha(r);
    for (std::size_t i = 0; i < r; ++i) alpha[i] = Rational(k(i, 0) * den).get_num();
    makePrimitiveCanonical(alpha);
    seen.insert(std::move(alpha));
    return true;
  });

  for (const auto& alpha : seen) {
    Cocircuit c;
    c.covector = alpha;
    c.values.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      Integer v = 0;
      for (std::size_t i = 0; i < r; ++i) v += alpha[i] * x(i, a);
      if (v > 1 || v < -1)
        throw NotTotallyUnimodular("cocircuit takes value " + v.get_str() + " on element '" + va.label(a) + "'");
      c.values[a] = static_cast<int>(v.get_si());
      if (c.values[a] == 1) ++c.dPlus;
      if (c.values[a] == -1) ++c.dMinus;
      if (c.values[a] != 0) c.support.push_back(a);
    }
    out.push_back(std::move(c));
  }

  // Complements of hyperplanes are automatically minimal; keep the filter anyway.
  std::vector<Cocircuit> minimal;
  for (const auto& c : out) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const Cocircuit& o) {
      return o.support.size() < c.support.size() &&
             std::includes(c.support.begin(), c.support.end(), o.support.begin(), o.support.end());
    });
    if (!dominated) minimal.push_back(c);
  }
  return minimal;
}

LatticePointSet interiorLatticePoints(const VectorArrangement& va) {
  if (va.rank() == 0) return {LatticePoint{}};
  if (!loopsAndColoops(va).coloops.empty()) return {};
  auto cocircuits = enumerateCocircuits(va);
  return interiorLatticePoints(va, cocircuits);
}

LatticePointSet interiorLatticePoints(const VectorArrangement& va, std::span<const Cocircuit> cocircuits) {
  const std::size_t r = va.rank();
  if (r == 0) return {LatticePoint{}};
  if (!loopsAndColoops(va).coloops.empty()) return {};

  std::vector<Integer> lo(r, Integer(0)), hi(r, Integer(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t a = 0; a < va.size(); ++a) {
      const Integer& e = va.columns()(i, a);
      if (e < 0) lo[i] += e;
      else hi[i] += e;
    }

  LatticePointSet points;
  LatticePoint z = lo;
  while (true) {
    bool inside = std::all_of(cocircuits.begin(), cocircuits.end(), [&](const Cocircuit& c) {
      Integer v = pairing(c.covector, z);
      return v > -static_cast<long>(c.dMinus) && v < static_cast<long>(c.dPlus);
    });
    if (inside) points.push_back(z);
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (z[i] < hi[i]) {
        ++z[i];
        for (std::size_t j = i + 1; j < r; ++j) z[j] = lo[j];
        break;
      }
      if (i == 0) return points;
    }
  }
}

std::optional<Covector> covectorWithValues(const VectorArrangement& va, std::span<const Integer> values) {
  assert(values.size() == va.size());
  RatMatrix xt = toRational(va.columns().transpose());
  std::vector<Rational> b(values.begin(), values.end());
  if (va.size() == 0) return Covector(va.rank(), Integer(0));
  auto sol = solveRational(xt, b);
  if (!sol) return std::nullopt;
  Covector alpha(va.rank());
  for (std::size_t i = 0; i < va.rank(); ++i) {
    if ((*sol)[i].get_den() != 1) return std::nullopt;
    alpha[i] = (*sol)[i].get_num();
  }
  return alpha;
}

} // namespace zonotopal
