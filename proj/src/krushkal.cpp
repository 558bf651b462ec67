#include "topotutte/expansions.hpp"

namespace topotutte {

RibbonGraph surface_dual(const RibbonGraph& parent) {
  auto edges = parent.edges();
  for (auto& e : edges) e.attrs.phantom = false;
  return partial_dual(RibbonGraph(parent.vertices(), std::move(edges)), parent.all_edges());
}

Poly krushkal(const RibbonGraph& parent, const EnumerationOptions& opts) {
  const Var x("X"), y("Y"), a("A"), b("B");
  const RibbonGraph dual = surface_dual(parent);
  const EdgeSet all = parent.all_edges();
  const EdgeSet live = parent.live_edges();
  const int k_graph = count_components(parent, live);
  const int k_surface = count_components(parent, all);

  return sum_over_subsets(
      live,
      [&](EdgeSet f) {
        const auto m = metrics(parent, f);
        const auto md = metrics(dual, all.minus(f));
        Monomial mono = Monomial(x, 2 * (m.k - k_graph)) * Monomial(y, 2 * (md.k - k_surface)) * Monomial(a, m.s) *
                        Monomial(b, md.s);
        return Poly::term(1, mono);
      },
      opts);
}

bool is_separable_loop(const RibbonGraph& parent, int e) {
  if (!parent.is_loop(e) || parent.attributes(e).phantom) return false;
  const RibbonGraph dual = surface_dual(parent);
  EdgeSet rest = dual.all_edges();
  rest.erase(e);
  return count_components(dual, rest) > count_components(dual, dual.all_edges());
}

}  // namespace topotutte
