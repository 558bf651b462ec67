#include "oracles.hpp"

#include <map>
#include <numeric>
#include <string>

namespace topotutte::oracle {

namespace {

struct Dsu {
  std::vector<int> parent;
  int classes;

  explicit Dsu(int n) : parent(n), classes(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --classes;
    }
  }
};

// X^a as a polynomial; doubled exponents allow halves.
Poly power_of(const char* name, int doubled) {
  if (doubled == 0) return Poly(1);
  return Poly::variable(name, doubled);
}

Poly binomial_power(const char* name, int exponent) {
  // (name - 1)^exponent
  return (Poly::variable(name) - Poly(1)).pow(static_cast<unsigned>(exponent));
}

struct Walk {
  int num_orbits = 0;
  std::vector<std::vector<int>> corner_visitors;   // gap after dart h -> orbits
  std::vector<std::vector<int>> orbits_on_edge;    // edge -> orbits crossing it
};

// Orbits of (dart, sign) states of the rotation system restricted to F.
Walk walk(const RibbonGraph& g, EdgeSet f) {
  const int n = g.num_half_edges();
  std::vector<int> next(n, -1), prev(n, -1);
  for (const auto& v : g.vertices()) {
    std::vector<int> kept;
    for (int h : v.rotation)
      if (f.contains(h / 2)) kept.push_back(h);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      next[kept[i]] = kept[(i + 1) % kept.size()];
      prev[kept[(i + 1) % kept.size()]] = kept[i];
    }
  }
  Walk w;
  w.corner_visitors.resize(n);
  w.orbits_on_edge.resize(g.num_edges());
  std::vector<int> seen(2 * n, 0);
  for (int h0 = 0; h0 < n; ++h0) {
    if (!f.contains(h0 / 2)) continue;
    for (int s0 : {1, -1}) {
      const int state0 = 2 * h0 + (s0 > 0);
      if (seen[state0]) continue;
      const int id = w.num_orbits++;
      int h = h0, s = s0;
      do {
        seen[2 * h + (s > 0)] = 1;
        const int p = h ^ 1;
        w.orbits_on_edge[h / 2].push_back(id);
        if (g.twisted(h / 2)) s = -s;
        if (s > 0) {
          w.corner_visitors[p].push_back(id);
          h = next[p];
        } else {
          w.corner_visitors[prev[p]].push_back(id);
          h = prev[p];
        }
      } while (!(h == h0 && s == s0));
    }
  }
  return w;
}

}  // namespace

int components(const RibbonGraph& g, EdgeSet f) {
  Dsu d(g.num_vertices());
  for (int e : f.indices()) d.unite(g.vertex_of(2 * e), g.vertex_of(2 * e + 1));
  return d.classes;
}

int components(const AbstractGraph& g, EdgeSet f) {
  Dsu d(g.num_vertices);
  for (int e : f.indices()) d.unite(g.edges[e].first, g.edges[e].second);
  return d.classes;
}

FaceIncidence face_incidence(const RibbonGraph& g) {
  const EdgeSet all = g.all_edges();
  Walk w = walk(g, all);
  Dsu d(w.num_orbits);
  // The two directions of one face pass through the same corners.
  for (const auto& v : w.corner_visitors)
    for (std::size_t i = 1; i < v.size(); ++i) d.unite(v[0], v[i]);

  std::map<int, int> face_id;
  FaceIncidence out;
  auto face_of = [&](int orbit) {
    auto [it, fresh] = face_id.emplace(d.find(orbit), static_cast<int>(face_id.size()));
    return it->second;
  };
  out.sides.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e)
    for (int o : w.orbits_on_edge[e]) out.sides[e].push_back(face_of(o));
  for (int o = 0; o < w.num_orbits; ++o) face_of(o);
  out.num_faces = static_cast<int>(face_id.size());
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) ++out.num_faces;
  return out;
}

int faces(const RibbonGraph& g, EdgeSet f) {
  const int n = g.num_half_edges();
  std::vector<int> next(n, -1), prev(n, -1);
  int bare = 0;
  for (const auto& v : g.vertices()) {
    std::vector<int> kept;
    for (int h : v.rotation)
      if (f.contains(h / 2)) kept.push_back(h);
    if (kept.empty()) ++bare;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      next[kept[i]] = kept[(i + 1) % kept.size()];
      prev[kept[(i + 1) % kept.size()]] = kept[i];
    }
  }
  std::vector<int> seen(2 * n, 0);
  int orbits = 0;
  for (int h0 = 0; h0 < n; ++h0) {
    if (!f.contains(h0 / 2)) continue;
    for (int s0 : {1, -1}) {
      if (seen[2 * h0 + (s0 > 0)]) continue;
      ++orbits;
      int h = h0, s = s0;
      do {
        seen[2 * h + (s > 0)] = 1;
        const int p = h ^ 1;
        if (g.twisted(h / 2)) s = -s;
        h = s > 0 ? next[p] : prev[p];
      } while (!(h == h0 && s == s0));
    }
  }
  return orbits / 2 + bare;
}

int dual_components(const RibbonGraph& g, EdgeSet f) {
  const FaceIncidence inc = face_incidence(g);
  Dsu d(inc.num_faces);
  for (int e : g.all_edges().minus(f).indices())
    for (int x : inc.sides[e]) d.unite(inc.sides[e][0], x);
  return d.classes;
}

Poly tutte(const AbstractGraph& g) {
  const int m = g.num_edges();
  const EdgeSet all = EdgeSet::all(m);
  const int rank_e = g.num_vertices - components(g, all);
  Poly sum;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
    const EdgeSet f(b);
    const int r = g.num_vertices - components(g, f);
    sum += binomial_power("x", rank_e - r) * binomial_power("y", f.size() - r);
  }
  return sum;
}

Poly bollobas_riordan(const RibbonGraph& g) {
  const int m = g.num_edges();
  const int v = g.num_vertices();
  const int rank_g = v - components(g, g.all_edges());
  Poly sum;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
    const EdgeSet f(b);
    const int k = components(g, f);
    const int r = v - k;
    const int n = f.size() - r;
    Poly term = power_of("X", 2 * (rank_g - r)) * power_of("Y", 2 * n) * power_of("Z", 2 * (k - faces(g, f) + n));
    for (int e = 0; e < m; ++e) term *= f.contains(e) ? g.attributes(e).weight_x : g.attributes(e).weight_y;
    sum += term;
  }
  return sum;
}

Poly krushkal(const RibbonGraph& parent) {
  const int m = parent.num_edges();
  const int v = parent.num_vertices();
  EdgeSet live;
  for (int e = 0; e < m; ++e)
    if (!parent.attributes(e).phantom) live.insert(e);
  const int k_live = components(parent, live);
  const int k_parent = components(parent, parent.all_edges());
  const int num_faces = face_incidence(parent).num_faces;
  Poly sum;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
    const EdgeSet f(b);
    if (!f.subset_of(live)) continue;
    const int k = components(parent, f);
    const int bc = faces(parent, f);
    const int s = k + f.size() - (v - k) - bc;
    const int k_star = dual_components(parent, f);
    const int rest = m - f.size();
    const int s_star = k_star + rest - (num_faces - k_star) - bc;
    sum += power_of("X", 2 * (k - k_live)) * power_of("Y", 2 * (k_star - k_parent)) * power_of("A", s) *
           power_of("B", s_star);
  }
  return sum;
}

Poly las_vergnas(const RibbonGraph& g) {
  const int m = g.num_edges();
  const int v = g.num_vertices();
  const int num_faces = face_incidence(g).num_faces;
  const EdgeSet all = g.all_edges();
  // r_{C(G*)}(A) = faces - components of G* restricted to A, where A is a set
  // of edges of G; dual_components takes the complement.
  auto dual_cycle_rank = [&](EdgeSet a) { return num_faces - dual_components(g, all.minus(a)); };
  auto rank_m = [&](EdgeSet f) { return f.size() - dual_cycle_rank(all) + dual_cycle_rank(all.minus(f)); };
  auto rank_mp = [&](EdgeSet f) { return v - components(g, f); };
  const int rm_e = rank_m(all), rmp_e = rank_mp(all);
  Poly sum;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
    const EdgeSet f(b);
    const int rm = rank_m(f), rmp = rank_mp(f);
    sum += binomial_power("x", rmp_e - rmp) * binomial_power("y", f.size() - rm) *
           power_of("z", 2 * ((rm_e - rm) - (rmp_e - rmp)));
  }
  return sum;
}

std::set<int> arrow_reduction_lengths(const std::vector<int>& word) {
  static std::map<std::vector<int>, std::set<int>> memo;
  if (auto it = memo.find(word); it != memo.end()) return it->second;
  std::set<int> out;
  const std::size_t n = word.size();
  bool reducible = false;
  for (std::size_t i = 0; n >= 2 && i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (word[i] != word[j]) continue;
    reducible = true;
    std::vector<int> rest;
    for (std::size_t t = 0; t < n; ++t)
      if (t != i && t != j) rest.push_back(word[t]);
    auto sub = arrow_reduction_lengths(rest);
    out.insert(sub.begin(), sub.end());
  }
  if (!reducible) out.insert(static_cast<int>(n));
  memo.emplace(word, out);
  return out;
}

}  // namespace topotutte::oracle
