#include "zonotopal/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zonotopal/errors.hpp"
#include "zonotopal/linalg.hpp"

namespace zonotopal {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

std::size_t otherEnd(const Arrow& a, std::size_t v) { return a.tail == v ? a.head : a.tail; }

} // namespace

std::size_t DirectedGraph::addVertex(std::string label) {
  if (hasVertex(label)) throw InvalidArgument("duplicate vertex '" + label + "'");
  vertices_.push_back(std::move(label));
  return vertices_.size() - 1;
}

bool DirectedGraph::hasVertex(std::string_view label) const {
  return std::find(vertices_.begin(), vertices_.end(), label) != vertices_.end();
}

std::size_t DirectedGraph::vertexIndex(std::string_view label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) throw InvalidArgument("unknown vertex '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

void DirectedGraph::addArrow(ArrowId id, std::string_view tail, std::string_view head) {
  addArrow(id, vertexIndex(tail), vertexIndex(head));
}

void DirectedGraph::addArrow(ArrowId id, std::size_t tail, std::size_t head) {
  if (tail >= vertices_.size() || head >= vertices_.size()) throw InvalidArgument("arrow endpoint out of range");
  auto pos = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                              [](const Arrow& a, ArrowId x) { return a.id < x; });
  if (pos != arrows_.end() && pos->id == id) throw InvalidArgument("duplicate arrow id " + std::to_string(id));
  arrows_.insert(pos, Arrow{id, tail, head});
}

std::size_t DirectedGraph::arrowIndex(ArrowId id) const {
  auto pos = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                              [](const Arrow& a, ArrowId x) { return a.id < x; });
  if (pos == arrows_.end() || pos->id != id) throw InvalidArgument("unknown arrow id " + std::to_string(id));
  return static_cast<std::size_t>(pos - arrows_.begin());
}

std::size_t connectedComponents(const DirectedGraph& g) {
  UnionFind uf(g.vertexCount());
  std::size_t components = g.vertexCount();
  for (const auto& a : g.arrows())
    if (uf.unite(a.tail, a.head)) --components;
  return components;
}

std::size_t graphRank(const DirectedGraph& g) { return g.vertexCount() - connectedComponents(g); }

std::vector<ArrowId> OrientedCycle::positiveArrows() const {
  std::vector<ArrowId> out;
  for (const auto& s : cyclicOrder)
    if (s.sign > 0) out.push_back(s.arrow);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArrowId> OrientedCycle::negativeArrows() const {
  std::vector<ArrowId> out;
  for (const auto& s : cyclicOrder)
    if (s.sign < 0) out.push_back(s.arrow);
  std::sort(out.begin(), out.end());
  return out;
}

OrientedCycle OrientedCycle::opposite() const {
  OrientedCycle c;
  for (auto it = cyclicOrder.rbegin(); it != cyclicOrder.rend(); ++it) c.cyclicOrder.push_back({it->arrow, -it->sign});
  return c;
}

std::vector<Integer> OrientedCycle::edgeVector(const DirectedGraph& g) const {
  std::vector<Integer> v(g.arrowCount(), Integer(0));
  for (const auto& s : cyclicOrder) v[g.arrowIndex(s.arrow)] += s.sign;
  return v;
}

bool OrientedCycle::isValidIn(const DirectedGraph& g) const {
  const std::size_t k = cyclicOrder.size();
  if (k == 0) return false;
  std::set<ArrowId> arrowsSeen;
  std::set<std::size_t> heads;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& cur = cyclicOrder[i];
    const auto& next = cyclicOrder[(i + 1) % k];
    if (cur.sign != 1 && cur.sign != -1) return false;
    std::size_t ci, ni;
    try {
      ci = g.arrowIndex(cur.arrow);
      ni = g.arrowIndex(next.arrow);
    } catch (const InvalidArgument&) {
      return false;
    }
    const Arrow& a = g.arrows()[ci];
    const Arrow& b = g.arrows()[ni];
    std::size_t h = cur.sign > 0 ? a.head : a.tail;
    std::size_t t = next.sign > 0 ? b.tail : b.head;
    if (h != t) return false;
    if (!heads.insert(h).second) return false;
    if (!arrowsSeen.insert(cur.arrow).second) return false;
  }
  return true;
}

CographicalArrangement cographicalArrangement(const DirectedGraph& g) {
  const auto& arrows = g.arrows();
  UnionFind uf(g.vertexCount());
  std::vector<bool> inForest(arrows.size(), false);
  std::vector<ArrowId> forest;
  for (std::size_t k = 0; k < arrows.size(); ++k)
    if (uf.unite(arrows[k].tail, arrows[k].head)) {
      inForest[k] = true;
      forest.push_back(arrows[k].id);
    }

  // Forest adjacency for path queries.
  std::vector<std::vector<std::size_t>> adj(g.vertexCount());
  for (std::size_t k = 0; k < arrows.size(); ++k)
    if (inForest[k]) {
      adj[arrows[k].tail].push_back(k);
      adj[arrows[k].head].push_back(k);
    }

  auto forestPath = [&](std::size_t from, std::size_t to) {
    // DFS from `from`, recording the arrow used to reach each vertex.
    std::vector<long> via(g.vertexCount(), -1);
    std::vector<bool> seen(g.vertexCount(), false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (auto k : adj[v]) {
        std::size_t w = otherEnd(arrows[k], v);
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = static_cast<long>(k);
        stack.push_back(w);
      }
    }
    std::vector<SignedArrow> path;
    for (std::size_t v = to; v != from;) {
      const Arrow& a = arrows[static_cast<std::size_t>(via[v])];
      std::size_t prev = otherEnd(a, v);
      path.push_back({a.id, a.head == v && a.tail == prev ? 1 : -1});
      v = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  std::vector<OrientedCycle> basis;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (inForest[k]) continue;
    OrientedCycle c;
    c.cyclicOrder.push_back({arrows[k].id, 1});
    if (!arrows[k].isSelfLoop())
      for (const auto& s : forestPath(arrows[k].head, arrows[k].tail)) c.cyclicOrder.push_back(s);
    basis.push_back(std::move(c));
  }

  const std::size_t r = basis.size();
  IntMatrix cols(r, arrows.size());
  for (std::size_t j = 0; j < r; ++j) {
    auto ev = basis[j].edgeVector(g);
    for (std::size_t a = 0; a < arrows.size(); ++a) cols(j, a) = ev[a];
  }
  std::vector<std::string> labels;
  for (const auto& a : arrows) labels.push_back(std::to_string(a.id));
  return {VectorArrangement(r, std::move(labels), std::move(cols), true), std::move(basis), std::move(forest)};
}

CographicalArrangement cographicalArrangement(const DirectedGraph& g, std::vector<OrientedCycle> basis) {
  auto fundamental = cographicalArrangement(g);
  const std::size_t r = fundamental.basis.size();
  if (basis.size() != r)
    throw InvalidArgument("cycle basis must have " + std::to_string(r) + " cycles");
  for (const auto& c : basis)
    if (!c.isValidIn(g)) throw InvalidArgument("cycle basis contains an invalid oriented cycle");

  // Coordinates of each proposed cycle in the fundamental basis are its
  // coefficients on the non-forest arrows; a Z-basis iff that matrix is unimodular.
  std::vector<std::size_t> nonForest;
  for (std::size_t k = 0; k < g.arrowCount(); ++k)
    if (!std::binary_search(fundamental.spanningForest.begin(), fundamental.spanningForest.end(), g.arrows()[k].id))
      nonForest.push_back(k);
  IntMatrix change(r, r);
  IntMatrix cols(r, g.arrowCount());
  for (std::size_t j = 0; j < r; ++j) {
    auto ev = basis[j].edgeVector(g);
    for (std::size_t k = 0; k < r; ++k) change(j, k) = ev[nonForest[k]];
    for (std::size_t a = 0; a < g.arrowCount(); ++a) cols(j, a) = ev[a];
  }
  Integer det = determinant(change);
  if (det != 1 && det != -1) throw InvalidArgument("cycles do not form a Z-basis of the cycle lattice");

  std::vector<std::string> labels;
  for (const auto& a : g.arrows()) labels.push_back(std::to_string(a.id));
  return {VectorArrangement(r, std::move(labels), std::move(cols), true), std::move(basis), {}};
}

std::vector<OrientedCycle> enumerateOrientedCycles(const DirectedGraph& g) {
  const auto& arrows = g.arrows();
  std::vector<std::vector<std::size_t>> incident(g.vertexCount());
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    if (arrows[k].isSelfLoop()) continue;
    incident[arrows[k].tail].push_back(k);
    incident[arrows[k].head].push_back(k);
  }

  std::vector<OrientedCycle> out;
  for (std::size_t anchor = 0; anchor < arrows.size(); ++anchor) {
    const Arrow& a0 = arrows[anchor];
    if (a0.isSelfLoop()) {
      out.push_back(OrientedCycle{{{a0.id, 1}}});
      continue;
    }
    const std::size_t start = a0.tail;
    std::vector<bool> visited(g.vertexCount(), false);
    visited[start] = true;
    visited[a0.head] = true;
    std::vector<SignedArrow> path{{a0.id, 1}};

    auto extend = [&](auto&& self, std::size_t v) -> void {
      for (auto k : incident[v]) {
        if (k <= anchor) continue;
        const Arrow& a = arrows[k];
        std::size_t w = otherEnd(a, v);
        int sign = a.tail == v ? 1 : -1;
        if (w == start) {
          path.push_back({a.id, sign});
          out.push_back(OrientedCycle{path});
          path.pop_back();
          continue;
        }
        if (visited[w]) continue;
        visited[w] = true;
        path.push_back({a.id, sign});
        self(self, w);
        path.pop_back();
        visited[w] = false;
      }
    };
    extend(extend, a0.head);
  }
  return out;
}

Covector cycleClass(const DirectedGraph& g, const CographicalArrangement& ca, const OrientedCycle& c) {
  auto values = c.edgeVector(g);
  auto alpha = covectorWithValues(ca.arrangement, values);
  if (!alpha) throw InvalidArgument("cycle does not define an integral class");
  return *alpha;
}

std::vector<ThetaSubgraph> thetaSubgraphs(const DirectedGraph& g, std::span<const OrientedCycle> cycles) {
  std::vector<std::vector<Integer>> vec;
  vec.reserve(cycles.size());
  for (const auto& c : cycles) vec.push_back(c.edgeVector(g));
  const std::size_t m = g.arrowCount();

  std::vector<ThetaSubgraph> out;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j)
      for (std::size_t k = j + 1; k < cycles.size(); ++k)
        for (int sj : {1, -1})
          for (int sk : {1, -1}) {
            bool zero = true;
            for (std::size_t a = 0; a < m && zero; ++a) zero = vec[i][a] + sj * vec[j][a] + sk * vec[k][a] == 0;
            if (!zero) continue;
            std::array<int, 3> signs{1, sj, sk};
            if (sj + sk < 0) signs = {-1, -sj, -sk};
            out.push_back({{i, j, k}, signs});
          }
  return out;
}

} // namespace zonotopal
