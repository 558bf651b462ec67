#pragma once

// Relative plane graphs: a genus-0 ribbon graph C whose edges flagged `zero`
// form the 0-edge set H. Regular edges carry weights x_e, y_e.

#include "topotutte/expansions.hpp"
#include "topotutte/polynomial.hpp"
#include "topotutte/ribbon_graph.hpp"
#include "topotutte/tutte.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace topotutte {

class RelativeGraph {
 public:
  // Throws GraphError unless s(C) = 0 and C has no phantom edges.
  explicit RelativeGraph(RibbonGraph c);

  const RibbonGraph& graph() const { return c_; }
  EdgeSet zero_edges() const { return zero_; }
  EdgeSet regular_edges() const { return c_.all_edges().minus(zero_); }

 private:
  RibbonGraph c_;
  EdgeSet zero_;
};

// One straight-ahead circle of the medial graph of (V, F): the gaps it runs
// through, as (half-edge, forward) pairs where forward means the gap after
// the half-edge is walked along the rotation. A vertex without F half-edges
// gives a free circle with no gaps.
struct MedialCircle {
  int free_vertex = -1;
  std::vector<std::pair<HalfEdge, bool>> gaps;
};

// Circles of the medial graph of the spanning subgraph (V, F) of a plane
// ribbon graph.
std::vector<MedialCircle> medial_circles(const RibbonGraph& g, EdgeSet f);
int medial_circle_count(const RibbonGraph& g, EdgeSet f);

// H_F: the plane graph obtained from F u H by contracting the edges of F
// (a loop is deleted instead). Returned embedded, with only H edges left.
RibbonGraph h_sub_f_embedded(const RelativeGraph& r, EdgeSet f);
AbstractGraph h_sub_f(const RelativeGraph& r, EdgeSet f);

// psi(G) = d^{delta(G)-k(G)} w^{v(G)-k(G)}, with delta counted by medial
// circles.
Poly psi(const RibbonGraph& plane);

// T_{C,H}(X, Y, psi) as a polynomial in X, Y, d, w and the edge weights.
Poly relative_tutte(const RelativeGraph& r, const EnumerationOptions& opts = {});

// Plane dual with 0-flags kept along the edge bijection and the weights
// swapped (x_{e*} = y_e, y_{e*} = x_e).
RelativeGraph relative_dual(const RelativeGraph& r);

// The ribbon graph whose vertices are the medial circles of H and whose
// edges are the regular edges of C (same names and attributes, zero flags
// cleared).
RibbonGraph to_ribbon(const RelativeGraph& r);

struct IdentityReport {
  bool ok = true;
  int points = 0;
  std::vector<std::string> lines;  // one line per evaluation point
};

// Samples X = p^2, Y = q^2 and every other variable at random rationals with
// numerators and denominators in [1, 97].
struct PointSampler {
  std::uint64_t seed = 1;
  int points = 20;
};

// Checks X^alpha Y^beta T_{C,H}(X, Y, psi) = BR_G(X, Y, 1/sqrt(XY)) with
// w = sqrt(X/Y), d = sqrt(XY) and G = to_ribbon(C, H).
IdentityReport verify_buch(const RelativeGraph& r, const PointSampler& sampler = {});

// Checks X^{a(C,H)} Y^{b(C)} T_{C,H}(X,Y,psi) = Y^{a(C*,H*)} X^{b(C*)} T_{C*,H*}(Y,X,psi)
// with w = sqrt(X/Y), d = sqrt(XY) taken in the original X, Y.
IdentityReport verify_relative_duality(const RelativeGraph& r, const PointSampler& sampler = {});

}  // namespace topotutte
