#include "topotutte/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "topotutte/quasitree.hpp"
#include "topotutte/relative.hpp"
#include "topotutte/sampling.hpp"
#include "topotutte/tutte.hpp"

namespace topotutte {

namespace {

const Var kX("X"), kY("Y"), kZ("Z"), kA("A"), kB("B");

RibbonGraph mark_phantom(const RibbonGraph& g, int e) {
  auto attrs = g.attributes(e);
  attrs.phantom = true;
  return g.with_attributes(e, attrs);
}

RibbonGraph unit_weights(const RibbonGraph& g) {
  auto edges = g.edges();
  for (auto& e : edges) {
    e.attrs.weight_x = Poly(1);
    e.attrs.weight_y = Poly(1);
  }
  return RibbonGraph(g.vertices(), std::move(edges));
}

bool is_plane(const RibbonGraph& g) { return !g.has_phantom_edges() && metrics(g).s == 0; }

std::string mismatch(const std::string& what, const Poly& lhs, const Poly& rhs) {
  return what + ": " + lhs.to_string() + " != " + rhs.to_string();
}

std::string mismatch(const std::string& what, const Rational& lhs, const Rational& rhs) {
  return what + ": " + to_string(lhs) + " != " + to_string(rhs);
}

}  // namespace

Poly krushkal_to_br(const Poly& k, int s) {
  const Poly a = Poly::term(1, Monomial(kY, 2) * Monomial(kZ, 4));
  const Poly b = Poly::variable(kY, -2);
  return Poly::variable(kY, s) * substitute_monomial(k, {{kA, a}, {kB, b}});
}

Poly krushkal_dual_swap(const Poly& k) {
  return substitute_monomial(k, {{kX, Poly::variable(kY)},
                                 {kY, Poly::variable(kX)},
                                 {kA, Poly::variable(kB)},
                                 {kB, Poly::variable(kA)}});
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"br-rec", "krushkal-rec", "specializations", "duality", "butler", "buch"};
  return names;
}

SuiteResult verify_br_recurrence(const RibbonGraph& g, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "br-rec";
  if (g.has_phantom_edges()) {
    ++r.skipped;
    return r;
  }
  const auto& eo = opts.enumeration;
  const Poly br = bollobas_riordan(g, eo);
  const Poly x = Poly::variable(kX), y = Poly::variable(kY), z = Poly::variable(kZ);
  for (int e = 0; e < g.num_edges(); ++e) {
    const EdgeClass cls = classify_edge(g, e);
    if (cls == EdgeClass::nontrivial_orientable_loop) {
      ++r.skipped;
      continue;
    }
    const Poly& xe = g.attributes(e).weight_x;
    const Poly& ye = g.attributes(e).weight_y;
    const Poly del = bollobas_riordan(delete_edge(g, e), eo);
    const Poly con = bollobas_riordan(contract_edge(g, e), eo);
    Poly expected;
    switch (cls) {
      case EdgeClass::ordinary: expected = xe * con + ye * del; break;
      case EdgeClass::bridge: expected = xe * con + ye * x * del; break;
      case EdgeClass::trivial_orientable_loop: expected = xe * y * con + ye * del; break;
      case EdgeClass::nonorientable_loop: expected = xe * y * z * con + ye * del; break;
      case EdgeClass::nontrivial_orientable_loop: break;
    }
    ++r.checks;
    if (!(expected == br))
      r.failures.push_back(mismatch("edge " + g.edge(e).name + " (" + to_string(cls) + ")", br, expected));
  }
  if (g.num_edges() <= 6) {
    ++r.checks;
    const Poly both = bollobas_riordan(disjoint_union(g, g), eo);
    if (!(both == br * br)) r.failures.push_back(mismatch("BR of G + G vs BR(G)^2", both, br * br));
  }
  return r;
}

SuiteResult verify_krushkal_recurrence(const RibbonGraph& parent, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "krushkal-rec";
  const auto& eo = opts.enumeration;
  const Poly k = krushkal(parent, eo);
  const Poly one_x = Poly(1) + Poly::variable(kX), one_y = Poly(1) + Poly::variable(kY);
  const EdgeSet live = parent.live_edges();
  const int k_live = count_components(parent, live);
  for (int e : live.indices()) {
    const std::string name = parent.edge(e).name;
    if (!parent.is_loop(e)) {
      const Poly del = krushkal(mark_phantom(parent, e), eo);
      const Poly con = krushkal(contract_edge(parent, e), eo);
      EdgeSet rest = live;
      rest.erase(e);
      if (count_components(parent, rest) > k_live) {
        ++r.checks;
        if (!(k == one_x * con)) r.failures.push_back(mismatch("bridge " + name, k, one_x * con));
      } else {
        ++r.checks;
        if (!(k == con + del)) r.failures.push_back(mismatch("ordinary edge " + name, k, con + del));
      }
    } else if (is_separable_loop(parent, e)) {
      ++r.checks;
      const Poly del = krushkal(mark_phantom(parent, e), eo);
      if (!(k == one_y * del)) r.failures.push_back(mismatch("separable loop " + name, k, one_y * del));
    } else {
      ++r.skipped;
    }
  }
  if (parent.num_edges() <= 6) {
    ++r.checks;
    const Poly both = krushkal(disjoint_union(parent, parent), eo);
    if (!(both == k * k)) r.failures.push_back(mismatch("K of G + G vs K(G)^2", both, k * k));
  }
  return r;
}

SuiteResult verify_specializations(const RibbonGraph& input, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "specializations";
  if (input.has_phantom_edges()) {
    ++r.skipped;
    return r;
  }
  const RibbonGraph g = unit_weights(input.without_arrows());
  const auto& eo = opts.enumeration;
  const Poly br = bollobas_riordan(g, eo);
  const Poly k = krushkal(g, eo);
  const Poly lv = las_vergnas(g);
  const Var x("x"), y("y"), z("z");
  const Poly t = tutte(underlying_graph(g), x, y);
  const RibbonGraph dual = geometric_dual(g);
  const Poly t_dual = tutte(underlying_graph(dual), x, y);
  const int s = metrics(g).s;
  const int rank_m = g.num_edges() - metrics(dual).r;
  const int rank_m_prime = metrics(g).r;

  ++r.checks;
  if (!(krushkal_to_br(k, s) == br)) r.failures.push_back(mismatch("BR = Y^{s/2} K(X,Y,YZ^2,1/Y)", br, krushkal_to_br(k, s)));

  RationalSampler rng(opts.seed);
  for (int i = 0; i < opts.points; ++i) {
    const Rational xv = rng.next(), u = rng.next(), v = rng.next();
    const Rational yv = 1 + u * u;  // y - 1 is a square
    const Rational zv = v * v;
    const Rational tv = evaluate(t, {{x, xv}, {y, yv}});
    const std::string at = " at x=" + to_string(xv) + " y=" + to_string(yv);

    const Rational br_v = evaluate(br, {{kX, xv - 1}, {kY, yv - 1}, {kZ, 1}});
    ++r.checks;
    if (br_v != tv) r.failures.push_back(mismatch("BR(x-1,y-1,1) = T" + at, br_v, tv));

    const Rational k_t = power(u, s) * evaluate(k, {{kX, xv - 1}, {kY, yv - 1}, {kA, yv - 1}, {kB, 1 / (yv - 1)}});
    ++r.checks;
    if (k_t != tv) r.failures.push_back(mismatch("T = (y-1)^{s/2} K(x-1,y-1,y-1,1/(y-1))" + at, tv, k_t));

    const Rational lv_v = evaluate(lv, {{x, xv}, {y, yv}, {z, zv}});
    const Rational k_lv = power(v, s) * evaluate(k, {{kX, xv - 1}, {kY, yv - 1}, {kA, 1 / zv}, {kB, zv}});
    ++r.checks;
    if (lv_v != k_lv)
      r.failures.push_back(mismatch("LV = z^{s/2} K(x-1,y-1,1/z,z)" + at + " z=" + to_string(zv), lv_v, k_lv));

    const Rational lv_t = power(yv - 1, rank_m - rank_m_prime) * evaluate(lv, {{x, xv}, {y, yv}, {z, 1 / (yv - 1)}});
    ++r.checks;
    if (lv_t != tv) r.failures.push_back(mismatch("(y-1)^{r(M)-r(M')} LV(x,y,1/(y-1)) = T" + at, lv_t, tv));

    const Rational lv_m = evaluate(lv, {{x, xv}, {y, yv}, {z, xv - 1}});
    const Rational t_m = evaluate(t_dual, {{x, yv}, {y, xv}});
    ++r.checks;
    if (lv_m != t_m) r.failures.push_back(mismatch("LV(x,y,x-1) = T(M)" + at, lv_m, t_m));
  }
  return r;
}

SuiteResult verify_duality(const RibbonGraph& g, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "duality";
  if (g.has_phantom_edges()) {
    ++r.skipped;
    return r;
  }
  const RibbonGraph dual = geometric_dual(g);
  const auto m = metrics(g), md = metrics(dual), mdd = metrics(geometric_dual(dual));
  ++r.checks;
  if (md.v != m.bc || md.bc != m.v || md.e != m.e || md.k != m.k || md.s != m.s || !(mdd == m)) {
    std::ostringstream os;
    os << "dual metrics: G " << m << ", G* " << md << ", G** " << mdd;
    r.failures.push_back(os.str());
  }

  const Poly k = krushkal(g, opts.enumeration);
  const Poly kd = krushkal_dual_swap(krushkal(dual, opts.enumeration));
  ++r.checks;
  if (!(k == kd)) r.failures.push_back(mismatch("K_G(X,Y,A,B) = K_G*(Y,X,B,A)", k, kd));

  if (!is_plane(g)) {
    ++r.skipped;
    return r;
  }
  const RelativeGraph rel(g);
  const RelativeGraph back = relative_dual(relative_dual(rel));
  ++r.checks;
  if (!isomorphic(back.graph(), rel.graph(), true)) r.failures.push_back("relative dual is not an involution");
  auto report = verify_relative_duality(rel, {opts.seed, opts.points});
  r.checks += report.points;
  for (const auto& line : report.lines)
    if (line.find("MISMATCH") != std::string::npos) r.failures.push_back("relative duality " + line);
  return r;
}

SuiteResult verify_butler(const RibbonGraph& g, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "butler";
  if (g.has_phantom_edges()) {
    ++r.skipped;
    return r;
  }
  const Poly k = krushkal(g, opts.enumeration);
  std::mt19937_64 rng(opts.seed);
  EdgeOrder order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  for (int round = 0; round < 4; ++round) {
    if (round > 0) std::shuffle(order.begin(), order.end(), rng);
    const Poly kq = krushkal_via_quasitrees(g, order, opts.enumeration);
    ++r.checks;
    if (!(kq == k)) {
      std::string o;
      for (int e : order) o += (o.empty() ? "" : ",") + g.edge(e).name;
      r.failures.push_back(mismatch("quasi-tree expansion with order " + o, kq, k));
    }
  }

  if (count_components(g, g.all_edges()) != 1) return r;
  const RibbonGraph dual = geometric_dual(g);
  for (EdgeSet q : quasi_trees(g, opts.enumeration)) {
    const auto d = chord_diagram(g, q);
    const auto via = chord_diagram_via_partial_dual(g, q);
    const auto ds = chord_diagram(dual, g.all_edges().minus(q));
    std::string qs;
    for (int e : q.indices()) qs += (qs.empty() ? "" : ",") + g.edge(e).name;
    ++r.checks;
    if (!(d == via)) r.failures.push_back("chord diagram of {" + qs + "} differs from the partial-dual reading");
    ++r.checks;
    for (int e = 0; e < g.num_edges(); ++e) {
      const auto &c = d.chords[e], &cs = ds.chords[e];
      if (c.live != cs.live || c.orientable != cs.orientable || c.internal == cs.internal) {
        r.failures.push_back("dual quasi-tree flags of edge " + g.edge(e).name + " for {" + qs + "}");
        break;
      }
    }
  }
  return r;
}

SuiteResult verify_buch_suite(const RibbonGraph& g, const VerifyOptions& opts) {
  SuiteResult r;
  r.suite = "buch";
  if (!is_plane(g)) {
    ++r.skipped;
    return r;
  }
  auto report = verify_buch(RelativeGraph(g), {opts.seed, opts.points});
  r.checks += report.points;
  r.details = report.lines;
  for (const auto& line : report.lines)
    if (line.find("MISMATCH") != std::string::npos) r.failures.push_back(line);
  return r;
}

std::vector<SuiteResult> run_suites(const std::string& name, const RibbonGraph& g, const VerifyOptions& opts) {
  using Fn = SuiteResult (*)(const RibbonGraph&, const VerifyOptions&);
  const std::vector<std::pair<std::string, Fn>> table{
      {"br-rec", verify_br_recurrence},   {"krushkal-rec", verify_krushkal_recurrence},
      {"specializations", verify_specializations}, {"duality", verify_duality},
      {"butler", verify_butler},          {"buch", verify_buch_suite},
  };
  std::vector<SuiteResult> out;
  for (const auto& [suite, fn] : table)
    if (name == "all" || name == suite) out.push_back(fn(g, opts));
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace topotutte
