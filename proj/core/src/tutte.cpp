#include "zonotopal/tutte.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "zonotopal/errors.hpp"
#include "zonotopal/linalg.hpp"

namespace zonotopal {

BivariatePolynomial BivariatePolynomial::constant(const Integer& c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(unsigned i, unsigned j, const Integer& c) {
  BivariatePolynomial p;
  p.addTerm(i, j, c);
  return p;
}

void BivariatePolynomial::addTerm(unsigned i, unsigned j, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer BivariatePolynomial::coefficient(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

unsigned BivariatePolynomial::degreeX() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first);
  return d;
}

unsigned BivariatePolynomial::degreeY() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

Integer BivariatePolynomial::evaluate(const Integer& x, const Integer& y) const {
  Integer sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer xp, yp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), e.first);
    mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), e.second);
    sum += c * xp * yp;
  }
  return sum;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  BivariatePolynomial p;
  for (const auto& [e, c] : terms_) p.addTerm(e.second, e.first, c);
  return p;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) addTerm(e.first, e.second, c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.addTerm(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return p;
}

std::string BivariatePolynomial::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first.
  std::vector<std::pair<Exponents, Integer>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    unsigned dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first.first > r.first.first;
  });
  for (const auto& [e, c] : ordered) {
    Integer mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool unit = e.first + e.second > 0 && mag == 1;
    if (!unit) os << mag;
    auto power = [&](char var, unsigned k) {
      if (k == 0) return;
      if (!unit) os << '*';
      os << var;
      if (k > 1) os << '^' << k;
      unit = false;
    };
    power('x', e.first);
    power('y', e.second);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BivariatePolynomial& p) { return os << p.toString(); }

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

struct Multigraph {
  std::size_t vertices = 0;
  std::vector<Edge> edges;
};

std::size_t findRoot(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

bool isBridge(const Multigraph& g, std::size_t e) {
  std::vector<std::size_t> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (k == e) continue;
    parent[findRoot(parent, g.edges[k].first)] = findRoot(parent, g.edges[k].second);
  }
  return findRoot(parent, g.edges[e].first) != findRoot(parent, g.edges[e].second);
}

Multigraph deleteEdge(const Multigraph& g, std::size_t e) {
  Multigraph h = g;
  h.edges.erase(h.edges.begin() + static_cast<std::ptrdiff_t>(e));
  return h;
}

// Merge the endpoints of e into one vertex and drop e.
Multigraph contractEdge(const Multigraph& g, std::size_t e) {
  auto [u, v] = g.edges[e];
  if (u > v) std::swap(u, v);
  Multigraph h;
  h.vertices = g.vertices - 1;
  auto relabel = [&](std::size_t x) {
    if (x == v) x = u;
    return x > v ? x - 1 : x;
  };
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    if (k != e) h.edges.push_back({relabel(g.edges[k].first), relabel(g.edges[k].second)});
  return h;
}

// Vertex relabeling by iterated degree refinement, ties broken by index. Only
// the exact relabeled edge multiset is used as the key, so colliding keys
// always describe isomorphic graphs.
std::string canonicalKey(const Multigraph& g) {
  const std::size_t n = g.vertices;
  std::vector<std::vector<std::size_t>> nbr(n);
  for (const auto& [u, v] : g.edges) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  std::vector<std::size_t> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = nbr[v].size();
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (auto w : nbr[v]) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::size_t> next(n);
    for (std::size_t v = 0; v < n; ++v)
      next[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    if (next == color) break;
    color = std::move(next);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges) {
    auto a = position[u], b = position[v];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  std::string key = std::to_string(n) + ':';
  for (const auto& [u, v] : edges) key += std::to_string(u) + '-' + std::to_string(v) + ',';
  return key;
}

Multigraph withoutIsolatedVertices(const Multigraph& g) {
  std::vector<bool> used(g.vertices, false);
  for (const auto& [u, v] : g.edges) used[u] = used[v] = true;
  std::vector<std::size_t> index(g.vertices);
  std::size_t n = 0;
  for (std::size_t v = 0; v < g.vertices; ++v)
    if (used[v]) index[v] = n++;
  Multigraph h;
  h.vertices = n;
  for (const auto& [u, v] : g.edges) h.edges.push_back({index[u], index[v]});
  return h;
}

class TutteSolver {
 public:
  BivariatePolynomial solve(Multigraph g) {
    g = withoutIsolatedVertices(g);
    // Peel loops and bridges off as factors of y and x.
    unsigned loops = 0, bridges = 0;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].first == g.edges[e].second) {
          g = deleteEdge(g, e);
          ++loops;
          changed = true;
          break;
        }
        if (isBridge(g, e)) {
          g = contractEdge(g, e);
          ++bridges;
          changed = true;
          break;
        }
      }
    }
    g = withoutIsolatedVertices(g);
    BivariatePolynomial factor = BivariatePolynomial::monomial(bridges, loops);
    if (g.edges.empty()) return factor;

    std::string key = canonicalKey(g);
    auto it = memo_.find(key);
    if (it != memo_.end()) return factor * it->second;
    BivariatePolynomial t = solve(deleteEdge(g, 0)) + solve(contractEdge(g, 0));
    memo_.emplace(std::move(key), t);
    return factor * t;
  }

 private:
  std::unordered_map<std::string, BivariatePolynomial> memo_;
};

void expandSubsets(const VectorArrangement& va, std::size_t next, std::size_t size, RationalEchelon& basis,
                   std::map<std::pair<unsigned, unsigned>, Integer>& counts) {
  if (next == va.size()) {
    const std::size_t rk = basis.rank();
    counts[{static_cast<unsigned>(va.rank() - rk), static_cast<unsigned>(size - rk)}] += 1;
    return;
  }
  expandSubsets(va, next + 1, size, basis, counts);
  std::vector<Rational> v(va.rank());
  for (std::size_t i = 0; i < va.rank(); ++i) v[i] = va.columns()(i, next);
  RationalEchelon extended = basis;
  extended.insert(std::move(v));
  expandSubsets(va, next + 1, size + 1, extended, counts);
}

} // namespace

BivariatePolynomial tuttePolynomial(const DirectedGraph& g) {
  Multigraph m;
  m.vertices = g.vertexCount();
  for (const auto& a : g.arrows()) m.edges.push_back({a.tail, a.head});
  TutteSolver solver;
  return solver.solve(std::move(m));
}

BivariatePolynomial tutteOfArrangement(const VectorArrangement& va) {
  if (va.size() > kMaxSizeForSubsetExpansion)
    throw SizeExceeded("corank-nullity expansion limited to " + std::to_string(kMaxSizeForSubsetExpansion) +
                       " elements");
  std::map<std::pair<unsigned, unsigned>, Integer> counts;
  RationalEchelon empty;
  expandSubsets(va, 0, 0, empty, counts);

  // (x-1)^a (y-1)^b expanded binomially.
  BivariatePolynomial t;
  for (const auto& [ab, count] : counts) {
    auto [a, b] = ab;
    for (unsigned i = 0; i <= a; ++i)
      for (unsigned j = 0; j <= b; ++j) {
        Integer c = count * binomial(a, i) * binomial(b, j);
        if ((a - i + b - j) % 2 == 1) c = -c;
        t += BivariatePolynomial::monomial(i, j, c);
      }
  }
  return t;
}

std::vector<Integer> su2PoincarePolynomial(const DirectedGraph& g) {
  const auto t = tuttePolynomial(g);
  const std::size_t rk = graphRank(g);
  std::vector<Integer> coeffs(rk + 1, Integer(0));
  for (const auto& [e, c] : t.terms()) {
    if (e.second != 0) continue;
    assert(e.first <= rk);
    coeffs[rk - e.first] += c;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

} // namespace zonotopal
