#include "topotutte/relative.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "topotutte/expansions.hpp"
#include "topotutte/sampling.hpp"

namespace topotutte {

RelativeGraph::RelativeGraph(RibbonGraph c) : c_(normalized_orientation(c)) {
  if (c_.has_phantom_edges()) throw GraphError("a relative graph cannot have phantom edges");
  if (metrics(c_).s != 0) throw GraphError("a relative graph must be plane (s = 0)");
  for (int e = 0; e < c_.num_edges(); ++e)
    if (c_.attributes(e).zero) zero_.insert(e);
}

namespace {

// Rotations restricted to the half-edges of F.
struct RestrictedRotation {
  std::vector<HalfEdge> next, prev;
};

RestrictedRotation restrict_rotation(const RibbonGraph& g, EdgeSet f) {
  RestrictedRotation r{std::vector<HalfEdge>(g.num_half_edges(), -1), std::vector<HalfEdge>(g.num_half_edges(), -1)};
  for (const auto& v : g.vertices()) {
    std::vector<HalfEdge> kept;
    for (HalfEdge h : v.rotation)
      if (f.contains(RibbonGraph::edge_of(h))) kept.push_back(h);
    for (std::size_t i = 0; i < kept.size(); ++i) {
      r.next[kept[i]] = kept[(i + 1) % kept.size()];
      r.prev[kept[(i + 1) % kept.size()]] = kept[i];
    }
  }
  return r;
}

// State 2x+1: leaving the midpoint of edge(x) into the gap after x; state
// 2x: into the gap before x.
int medial_step(const RibbonGraph& g, const RestrictedRotation& rot, int state) {
  const HalfEdge x = state / 2;
  const bool after = state % 2;
  const HalfEdge y = after ? rot.next[x] : rot.prev[x];
  const bool arrive_after = !after;
  const HalfEdge p = RibbonGraph::partner(y);
  const bool exit_after = g.twisted(RibbonGraph::edge_of(y)) ? !arrive_after : arrive_after;
  return 2 * p + (exit_after ? 1 : 0);
}

int medial_reverse(const RestrictedRotation& rot, int state) {
  const HalfEdge x = state / 2;
  return state % 2 ? 2 * rot.next[x] : 2 * rot.prev[x] + 1;
}

}  // namespace

std::vector<MedialCircle> medial_circles(const RibbonGraph& g, EdgeSet f) {
  g.check_subset(f);
  const auto rot = restrict_rotation(g, f);
  std::vector<MedialCircle> out;
  std::vector<char> visited(2 * g.num_half_edges(), 0);

  for (int v = 0; v < g.num_vertices(); ++v) {
    bool touches = false;
    for (HalfEdge h : g.vertex(v).rotation) touches = touches || f.contains(RibbonGraph::edge_of(h));
    if (!touches) out.push_back({v, {}});
  }

  for (HalfEdge h = 0; h < g.num_half_edges(); ++h) {
    if (!f.contains(RibbonGraph::edge_of(h))) continue;
    for (int start : {2 * h + 1, 2 * h}) {
      if (visited[start]) continue;
      MedialCircle circle;
      int s = start;
      do {
        visited[s] = 1;
        const HalfEdge x = s / 2;
        if (s % 2)
          circle.gaps.emplace_back(x, true);
        else
          circle.gaps.emplace_back(rot.prev[x], false);
        s = medial_step(g, rot, s);
      } while (s != start);
      // The same circle walked the other way.
      const int back = medial_reverse(rot, start);
      s = back;
      do {
        visited[s] = 1;
        s = medial_step(g, rot, s);
      } while (s != back);
      out.push_back(std::move(circle));
    }
  }
  return out;
}

int medial_circle_count(const RibbonGraph& g, EdgeSet f) { return static_cast<int>(medial_circles(g, f).size()); }

RibbonGraph h_sub_f_embedded(const RelativeGraph& r, EdgeSet f) {
  const RibbonGraph& c = r.graph();
  if (!f.subset_of(r.regular_edges())) throw GraphError("F must consist of regular edges");

  std::unordered_set<std::string> contract_names;
  for (int e : f.indices()) contract_names.insert(c.edge(e).name);

  RibbonGraph g = c;
  for (int e = g.num_edges() - 1; e >= 0; --e)
    if (!f.contains(e) && !r.zero_edges().contains(e)) g = delete_edge(g, e);
  for (bool changed = true; changed;) {
    changed = false;
    for (int e = 0; e < g.num_edges(); ++e) {
      if (!contract_names.count(g.edge(e).name)) continue;
      g = g.is_loop(e) ? delete_edge(g, e) : contract_edge(g, e);
      changed = true;
      break;
    }
  }
  return g;
}

AbstractGraph h_sub_f(const RelativeGraph& r, EdgeSet f) { return underlying_graph(h_sub_f_embedded(r, f)); }

Poly psi(const RibbonGraph& plane) {
  const int k = count_components(plane, plane.all_edges());
  const int delta_value = medial_circle_count(plane, plane.all_edges());
  return Poly::term(1, Monomial(Var("d"), 2 * (delta_value - k)) * Monomial(Var("w"), 2 * (plane.num_vertices() - k)));
}

Poly relative_tutte(const RelativeGraph& r, const EnumerationOptions& opts) {
  const RibbonGraph& c = r.graph();
  const EdgeSet h = r.zero_edges();
  const EdgeSet regular = r.regular_edges();
  const int k_c = count_components(c, c.all_edges());
  const Var x("X"), y("Y");
  return sum_over_subsets(regular, [&](EdgeSet f) {
    const int k_fh = count_components(c, f | h);
    const int nullity = f.size() - (c.num_vertices() - count_components(c, f));
    Poly term = Poly::term(1, Monomial(x, 2 * (k_fh - k_c)) * Monomial(y, 2 * nullity)) * psi(h_sub_f_embedded(r, f));
    for (int e : regular.indices()) term *= f.contains(e) ? c.attributes(e).weight_x : c.attributes(e).weight_y;
    return term;
  }, opts);
}

RelativeGraph relative_dual(const RelativeGraph& r) {
  RibbonGraph dual = geometric_dual(r.graph());
  auto edges = dual.edges();
  for (auto& e : edges) std::swap(e.attrs.weight_x, e.attrs.weight_y);
  return RelativeGraph(RibbonGraph(dual.vertices(), std::move(edges)));
}

RibbonGraph to_ribbon(const RelativeGraph& r) {
  const RibbonGraph& c = r.graph();
  const EdgeSet h = r.zero_edges();
  auto is_zero = [&](HalfEdge x) { return h.contains(RibbonGraph::edge_of(x)); };

  // Regular half-edges grouped by the 0-edge half-edge whose following gap
  // holds them.
  std::vector<std::vector<HalfEdge>> gap_members(c.num_half_edges());
  for (const auto& v : c.vertices()) {
    const auto& rot = v.rotation;
    auto first_zero = std::find_if(rot.begin(), rot.end(), is_zero);
    if (first_zero == rot.end()) continue;
    const std::size_t start = first_zero - rot.begin();
    HalfEdge owner = rot[start];
    for (std::size_t i = 1; i <= rot.size(); ++i) {
      const HalfEdge x = rot[(start + i) % rot.size()];
      if (is_zero(x))
        owner = x;
      else
        gap_members[owner].push_back(x);
    }
  }

  std::vector<int> new_index(c.num_edges(), -1);
  std::vector<RibbonGraph::Edge> edges;
  for (int e : r.regular_edges().indices()) {
    new_index[e] = static_cast<int>(edges.size());
    edges.push_back(c.edge(e));
    edges.back().attrs.zero = false;
  }
  std::vector<int> direction(c.num_half_edges(), 0);
  auto relabel = [&](HalfEdge x) { return 2 * new_index[RibbonGraph::edge_of(x)] + x % 2; };

  std::vector<RibbonGraph::Vertex> vertices;
  for (const auto& circle : medial_circles(c, h)) {
    RibbonGraph::Vertex vx;
    vx.name = "m" + std::to_string(vertices.size());
    if (circle.free_vertex >= 0) {
      for (HalfEdge x : c.vertex(circle.free_vertex).rotation) {
        vx.rotation.push_back(relabel(x));
        direction[x] = 1;
      }
    }
    for (auto [x, forward] : circle.gaps) {
      const auto& members = gap_members[x];
      if (forward) {
        for (HalfEdge m : members) {
          vx.rotation.push_back(relabel(m));
          direction[m] = 1;
        }
      } else {
        for (auto it = members.rbegin(); it != members.rend(); ++it) {
          vx.rotation.push_back(relabel(*it));
          direction[*it] = -1;
        }
      }
    }
    vertices.push_back(std::move(vx));
  }
  for (int e : r.regular_edges().indices()) edges[new_index[e]].twist = direction[2 * e] != direction[2 * e + 1];
  return normalized_orientation(RibbonGraph(std::move(vertices), std::move(edges)));
}

namespace {

std::string point_line(int i, const Rational& p, const Rational& q, const Rational& lhs, const Rational& rhs) {
  std::ostringstream os;
  os << "point " << i << ": X=" << to_string(p * p) << " Y=" << to_string(q * q) << " lhs=" << to_string(lhs)
     << " rhs=" << to_string(rhs) << (lhs == rhs ? " ok" : " MISMATCH");
  return os.str();
}

}  // namespace

IdentityReport verify_buch(const RelativeGraph& r, const PointSampler& sampler) {
  const RibbonGraph& c = r.graph();
  const RibbonGraph g = to_ribbon(r);
  const Poly t = relative_tutte(r);
  const Poly br = bollobas_riordan(g);

  const int k_c = count_components(c, c.all_edges());
  const int k_g = count_components(g, g.all_edges());
  const int two_beta = c.num_vertices() - g.num_vertices();
  const int two_alpha = 2 * (k_c - k_g) - two_beta;

  const Var x("X"), y("Y"), z("Z"), d("d"), w("w");
  RationalSampler rng(sampler.seed);
  IdentityReport report;
  for (int i = 0; i < sampler.points; ++i) {
    const Rational p = rng.next(), q = rng.next();
    Assignment lhs_at{{x, p * p}, {y, q * q}, {d, p * q}, {w, p / q}};
    rng.fill(lhs_at, variables_of({&t, &br}));
    Assignment rhs_at = lhs_at;
    rhs_at[z] = 1 / (p * q);
    const Rational lhs = power(p, two_alpha) * power(q, two_beta) * evaluate(t, lhs_at);
    const Rational rhs = evaluate(br, rhs_at);
    report.lines.push_back(point_line(i, p, q, lhs, rhs));
    report.ok = report.ok && lhs == rhs;
    ++report.points;
  }
  return report;
}

IdentityReport verify_relative_duality(const RelativeGraph& r, const PointSampler& sampler) {
  const RelativeGraph dual = relative_dual(r);
  const RibbonGraph& c = r.graph();
  const RibbonGraph& cd = dual.graph();
  const Poly t = relative_tutte(r);
  const Poly td = relative_tutte(dual);

  auto two_a = [](const RelativeGraph& rg) {
    const RibbonGraph& g = rg.graph();
    return rg.regular_edges().size() - g.num_vertices() + 2 * count_components(g, g.all_edges());
  };
  const int two_a_c = two_a(r), two_a_d = two_a(dual);
  const int two_b_c = c.num_vertices(), two_b_d = cd.num_vertices();

  const Var x("X"), y("Y"), d("d"), w("w");
  RationalSampler rng(sampler.seed);
  IdentityReport report;
  for (int i = 0; i < sampler.points; ++i) {
    const Rational p = rng.next(), q = rng.next();
    Assignment at{{x, p * p}, {y, q * q}, {d, p * q}, {w, p / q}};
    rng.fill(at, variables_of({&t, &td}));
    // The substitution is applied to each side's own arguments, so w = q/p
    // once X and Y are exchanged.
    Assignment swapped = at;
    swapped[x] = q * q;
    swapped[y] = p * p;
    swapped[w] = q / p;
    const Rational lhs = power(p, two_a_c) * power(q, two_b_c) * evaluate(t, at);
    const Rational rhs = power(q, two_a_d) * power(p, two_b_d) * evaluate(td, swapped);
    report.lines.push_back(point_line(i, p, q, lhs, rhs));
    report.ok = report.ok && lhs == rhs;
    ++report.points;
  }
  return report;
}

}  // namespace topotutte
