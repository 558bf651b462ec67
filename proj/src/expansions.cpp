#include "topotutte/expansions.hpp"

#include <thread>

#include "topotutte/tutte.hpp"

namespace topotutte {

namespace {

EdgeSet deposit(std::uint64_t bits, const std::vector<int>& positions) {
  EdgeSet out;
  for (std::size_t i = 0; bits; ++i, bits >>= 1)
    if (bits & 1u) out.insert(positions[i]);
  return out;
}

const Var kX("X"), kY("Y"), kZ("Z");

}  // namespace

void check_enumeration_cap(int num_edges, const EnumerationOptions& opts) {
  if (num_edges > kDefaultEdgeCap && !opts.force)
    throw CapExceeded(std::to_string(num_edges) + " edges exceed the enumeration cap of " +
                      std::to_string(kDefaultEdgeCap) + " (use --force)");
  if (num_edges >= 63) throw CapExceeded("subset enumeration over 63 or more edges is not supported");
}

Poly sum_over_subsets(EdgeSet ground, const std::function<Poly(EdgeSet)>& fn, const EnumerationOptions& opts) {
  const auto positions = ground.indices();
  const int m = static_cast<int>(positions.size());
  check_enumeration_cap(m, opts);

  const std::uint64_t count = std::uint64_t{1} << m;
  const int workers = static_cast<int>(std::min<std::uint64_t>(std::max(1, opts.threads), count));
  std::vector<Poly> partial(workers);
  auto run = [&](int w) {
    const std::uint64_t lo = count * w / workers, hi = count * (w + 1) / workers;
    for (std::uint64_t i = lo; i < hi; ++i) partial[w] += fn(deposit(i, positions));
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  Poly total;
  for (const auto& p : partial) total += p;
  return total;
}

Poly bollobas_riordan(const RibbonGraph& g, const EnumerationOptions& opts) {
  if (g.has_phantom_edges()) throw GraphError("the Bollobas-Riordan polynomial needs a graph without phantom edges");
  const int r_full = metrics(g).r;
  bool unit = true;
  for (const auto& e : g.edges()) unit = unit && e.attrs.weight_x == Poly(1) && e.attrs.weight_y == Poly(1);

  return sum_over_subsets(
      g.all_edges(),
      [&](EdgeSet f) {
        const auto m = metrics(g, f);
        Monomial mono = Monomial(kX, 2 * (r_full - m.r)) * Monomial(kY, 2 * m.n) * Monomial(kZ, 2 * m.s);
        Poly term = Poly::term(1, mono);
        if (!unit)
          for (int e = 0; e < g.num_edges(); ++e) term *= f.contains(e) ? g.attributes(e).weight_x : g.attributes(e).weight_y;
        return term;
      },
      opts);
}

Poly signed_br(const RibbonGraph& g, const EnumerationOptions& opts) {
  const Poly x_neg = Poly::term(1, Monomial(kX, 1) * Monomial(kY, -1));
  const Poly y_neg = Poly::term(1, Monomial(kX, -1) * Monomial(kY, 1));
  auto edges = g.edges();
  for (auto& e : edges) {
    if (!e.attrs.sign) throw GraphError("edge '" + e.name + "' has no sign");
    const bool negative = *e.attrs.sign == Sign::negative;
    e.attrs.weight_x = negative ? x_neg : Poly(1);
    e.attrs.weight_y = negative ? y_neg : Poly(1);
  }
  return bollobas_riordan(RibbonGraph(g.vertices(), std::move(edges)), opts);
}

Poly signed_br_godsil_royle(const RibbonGraph& g, const Poly& alpha, const Poly& beta, const EnumerationOptions& opts) {
  auto edges = g.edges();
  for (auto& e : edges) {
    if (!e.attrs.sign) throw GraphError("edge '" + e.name + "' has no sign");
    const bool negative = *e.attrs.sign == Sign::negative;
    e.attrs.weight_x = negative ? alpha : beta;
    e.attrs.weight_y = negative ? beta : alpha;
  }
  Poly br = bollobas_riordan(RibbonGraph(g.vertices(), std::move(edges)), opts);
  return substitute_monomial(br, {{kZ, Poly(1)}, {kX, Poly::variable("x")}, {kY, Poly::variable("y")}});
}

Poly dichromatic_br(const RibbonGraph& g, const std::vector<Poly>& b, const EnumerationOptions& opts) {
  if (static_cast<int>(b.size()) != g.num_edges()) throw std::invalid_argument("one weight b_e per edge required");
  const Var a("a"), c("c");
  return sum_over_subsets(
      g.all_edges(),
      [&](EdgeSet f) {
        Poly term = Poly::term(1, Monomial(a, 2 * count_components(g, f)) * Monomial(c, 2 * count_boundary_components(g, f)));
        for (int e : f.indices()) term *= b[e];
        return term;
      },
      opts);
}

Poly las_vergnas(const RibbonGraph& g, const EnumerationOptions& opts) {
  if (g.has_phantom_edges()) throw GraphError("the Las Vergnas polynomial needs a cellular graph");
  check_enumeration_cap(g.num_edges(), opts);
  const auto m = dual_rank(cycle_rank(underlying_graph(geometric_dual(g))));
  const auto m_prime = cycle_rank(underlying_graph(g));
  return perspective_tutte(m, m_prime);
}

}  // namespace topotutte
