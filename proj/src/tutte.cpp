#include "topotutte/tutte.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace topotutte {

AbstractGraph::AbstractGraph(int n, std::vector<std::pair<int, int>> e) : num_vertices(n), edges(std::move(e)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto [a, b] : edges)
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("edge endpoint out of range");
}

AbstractGraph underlying_graph(const RibbonGraph& g, EdgeSet f) {
  g.check_subset(f);
  std::vector<std::pair<int, int>> edges;
  for (int e : f.indices()) edges.emplace_back(g.vertex_of(2 * e), g.vertex_of(2 * e + 1));
  return AbstractGraph(g.num_vertices(), std::move(edges));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

using EdgeList = std::vector<std::pair<int, int>>;

// Relabels vertices by (degree, first appearance) and sorts the edges. Two
// graphs with the same key are isomorphic, which is all the memo needs.
EdgeList memo_key(const EdgeList& edges, int n) {
  std::vector<int> degree(n, 0), first(n, -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    ++degree[a];
    ++degree[b];
    if (first[a] == -1) first[a] = static_cast<int>(i);
    if (first[b] == -1) first[b] = static_cast<int>(i);
  }
  std::vector<int> order;
  for (int v = 0; v < n; ++v)
    if (degree[v] > 0) order.push_back(v);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::tie(degree[a], first[a]) < std::tie(degree[b], first[b]); });
  std::vector<int> label(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<int>(i);
  EdgeList key;
  key.reserve(edges.size());
  for (auto [a, b] : edges) key.emplace_back(std::minmax(label[a], label[b]));
  std::sort(key.begin(), key.end());
  return key;
}

class TutteSolver {
 public:
  TutteSolver(Var x, Var y) : x_(Poly::variable(x)), y_(Poly::variable(y)) {}

  Poly solve(EdgeList edges, int n) {
    // Loops factor out as powers of y.
    unsigned loops = 0;
    EdgeList rest;
    for (auto e : edges) {
      if (e.first == e.second)
        ++loops;
      else
        rest.push_back(e);
    }
    Poly factor = y_.pow(loops);
    if (rest.empty()) return factor;

    auto key = memo_key(rest, n);
    if (auto it = memo_.find(key); it != memo_.end()) return factor * it->second;

    // Relabel into the compact key form so subproblems stay small.
    int m = 0;
    for (auto [a, b] : key) m = std::max(m, b + 1);
    Poly value = branch(key, m);
    memo_.emplace(std::move(key), value);
    return factor * value;
  }

 private:
  Poly branch(const EdgeList& edges, int n) {
    // Pick the last edge; the key is sorted so this favours high labels,
    // which are the high-degree vertices.
    const auto [u, v] = edges.back();
    EdgeList deleted(edges.begin(), edges.end() - 1);

    UnionFind uf(n);
    for (auto [a, b] : deleted) uf.unite(a, b);
    const bool bridge = uf.find(u) != uf.find(v);

    EdgeList contracted;
    contracted.reserve(deleted.size());
    for (auto [a, b] : deleted) contracted.emplace_back(a == v ? u : a, b == v ? u : b);

    if (bridge) return x_ * solve(std::move(contracted), n);
    return solve(std::move(deleted), n) + solve(std::move(contracted), n);
  }

  Poly x_, y_;
  std::map<EdgeList, Poly> memo_;
};

}  // namespace

int count_components(const AbstractGraph& g, EdgeSet f) {
  UnionFind uf(g.num_vertices);
  int k = g.num_vertices;
  for (int e : f.indices())
    if (uf.unite(g.edges.at(e).first, g.edges.at(e).second)) --k;
  return k;
}

Poly tutte(const AbstractGraph& g, Var x, Var y) {
  TutteSolver solver(x, y);
  return solver.solve(g.edges, g.num_vertices);
}

Poly tutte(const AbstractGraph& g) { return tutte(g, Var("x"), Var("y")); }

Poly dichromatic(const AbstractGraph& g, Var a, Var b) {
  std::vector<Poly> weights(g.num_edges(), Poly::variable(b));
  return dichromatic(g, weights, a);
}

Poly dichromatic(const AbstractGraph& g, const std::vector<Poly>& b, Var a) {
  if (static_cast<int>(b.size()) != g.num_edges()) throw std::invalid_argument("one weight per edge required");
  if (g.num_edges() > kMaxEdges - 1) throw std::invalid_argument("too many edges for subset enumeration");
  Poly total;
  const std::uint64_t count = std::uint64_t{1} << g.num_edges();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    EdgeSet f(bits);
    Poly term = Poly::variable(a, 2 * count_components(g, f));
    for (int e : f.indices()) term *= b[e];
    total += term;
  }
  return total;
}

int delta(const AbstractGraph& g) {
  Var x("x"), y("y");
  Rational value = evaluate(tutte(g, x, y), {{x, -1}, {y, -1}});
  Integer magnitude = abs(value.get_num());
  if (value.get_den() != 1 || magnitude == 0 || (magnitude & (magnitude - 1)) != 0)
    throw std::logic_error("|T(-1,-1)| is not a power of two");
  // sizeinbase of 2^j is j + 1; every further component adds one circle.
  return static_cast<int>(mpz_sizeinbase(magnitude.get_mpz_t(), 2)) - 1 + count_components(g);
}

int cycle_rank(const AbstractGraph& g, EdgeSet f) { return g.num_vertices - count_components(g, f); }

RankOracle cycle_rank(const AbstractGraph& g) {
  return RankOracle{g.num_edges(), [g](EdgeSet f) { return cycle_rank(g, f); }};
}

RankOracle dual_rank(RankOracle base) {
  const int full = base(base.ground());
  const int size = base.size;
  return RankOracle{size, [base = std::move(base), full](EdgeSet f) {
                      return f.size() + base(base.ground().minus(f)) - full;
                    }};
}

Poly perspective_tutte(const RankOracle& m, const RankOracle& m_prime) {
  if (m.size != m_prime.size) throw std::invalid_argument("perspective matroids need a common ground set");
  if (m.size > kMaxEdges - 1) throw std::invalid_argument("ground set too large");
  const EdgeSet ground = m.ground();
  const int r_full = m(ground), rp_full = m_prime(ground);

  std::map<std::tuple<int, int, int>, long> counts;
  const std::uint64_t count = std::uint64_t{1} << m.size;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    EdgeSet f(bits);
    const int r = m(f), rp = m_prime(f);
    if (r < rp) throw std::invalid_argument("not a matroid perspective: r_M(F) < r_M'(F)");
    const int z = (r_full - r) - (rp_full - rp);
    if (z < 0) throw std::invalid_argument("not a matroid perspective: negative z exponent");
    ++counts[{rp_full - rp, f.size() - r, z}];
  }

  const Poly xm = Poly::variable("x") - 1, ym = Poly::variable("y") - 1;
  const Var z("z");
  Poly total;
  for (const auto& [exps, c] : counts) {
    auto [a, b, zc] = exps;
    total += Poly(c) * xm.pow(a) * ym.pow(b) * Poly::variable(z, 2 * zc);
  }
  return total;
}

}  // namespace topotutte
