#include "topotutte/expansions.hpp"

namespace topotutte {

int arrow_reduce_length(const ArrowWord& word) {
  // Linear pass first, then cancel across the seam while the ends agree.
  std::vector<int> stack;
  for (int d : word) {
    if (!stack.empty() && stack.back() == d)
      stack.pop_back();
    else
      stack.push_back(d);
  }
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == stack[hi - 1]) {
    ++lo;
    --hi;
  }
  return static_cast<int>(hi - lo);
}

Rational arrow_reduce(const ArrowWord& word) {
  Rational c(arrow_reduce_length(word), 2);
  c.canonicalize();
  return c;
}

namespace {

void append_arc(ArrowWord& out, const ArrowStructure& arrows, const Arc& arc, bool forward) {
  auto it = arrows.find(arc);
  if (it == arrows.end()) return;
  if (forward) {
    out.insert(out.end(), it->second.begin(), it->second.end());
  } else {
    for (auto d = it->second.rbegin(); d != it->second.rend(); ++d) out.push_back(-*d);
  }
}

}  // namespace

std::vector<ArrowWord> boundary_arrow_words(const RibbonGraph& g, EdgeSet f) {
  std::vector<ArrowWord> words;
  const auto& arrows = g.arrows();
  for (const auto& comp : trace_boundary(g, f)) {
    ArrowWord w;
    for (const auto& step : comp) {
      switch (step.kind) {
        case BoundaryStep::Kind::gap:
          append_arc(w, arrows, {Arc::Kind::vertex_gap, g.vertex_of(step.index), g.position(step.index)}, step.forward);
          break;
        case BoundaryStep::Kind::free_circle:
          append_arc(w, arrows, {Arc::Kind::vertex_gap, step.index, 0}, true);
          break;
        case BoundaryStep::Kind::side:
          append_arc(w, arrows, {Arc::Kind::edge_side, step.index, step.side}, step.forward);
          break;
        case BoundaryStep::Kind::segment:
          break;  // arrows on the sides of an edge outside F are discarded
      }
    }
    words.push_back(std::move(w));
  }
  return words;
}

Poly arrow_br(const RibbonGraph& g, const EnumerationOptions& opts) {
  if (g.has_phantom_edges()) throw GraphError("the arrow polynomial needs a graph without phantom edges");
  const Var x("X"), y("Y"), z("Z");
  const int r_full = metrics(g).r;
  return sum_over_subsets(
      g.all_edges(),
      [&](EdgeSet f) {
        const auto m = metrics(g, f);
        Monomial mono = Monomial(x, 2 * (r_full - m.r)) * Monomial(y, 2 * m.n) * Monomial(z, 2 * m.s);
        for (const auto& w : boundary_arrow_words(g, f)) {
          const int len = arrow_reduce_length(w);
          if (len > 0) mono = mono * Monomial(Var::arrow(arrow_reduce(w)), 2);
        }
        Poly term = Poly::term(1, mono);
        for (int e = 0; e < g.num_edges(); ++e) term *= f.contains(e) ? g.attributes(e).weight_x : g.attributes(e).weight_y;
        return term;
      },
      opts);
}

}  // namespace topotutte
