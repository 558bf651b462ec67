#pragma once

// Spanning-subgraph expansions over ribbon graphs: Bollobas-Riordan (weighted,
// signed, dichromatic, arrow), Krushkal and Las Vergnas polynomials.
//
// Edge weights x_e, y_e come from EdgeAttributes. An embedded pair (a graph
// in a surface, not necessarily cellular) is a parent ribbon graph whose
// phantom edges only shape the surface; Krushkal sums run over subsets of
// the live edges.

#include "topotutte/polynomial.hpp"
#include "topotutte/ribbon_graph.hpp"

#include <functional>
#include <stdexcept>

namespace topotutte {

inline constexpr int kDefaultEdgeCap = 24;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  bool force = false;  // allow more than kDefaultEdgeCap edges
  int threads = 1;
};

// Throws CapExceeded when `num_edges` exceeds the cap and opts.force is off.
void check_enumeration_cap(int num_edges, const EnumerationOptions& opts);

// Calls fn(F) for every F subset of `ground`, split over opts.threads
// workers; each worker folds into its own accumulator and the results are
// summed. Throws CapExceeded for more than kDefaultEdgeCap edges unless
// forced.
Poly sum_over_subsets(EdgeSet ground, const std::function<Poly(EdgeSet)>& fn, const EnumerationOptions& opts = {});

// BR_G(X, Y, Z) = sum_F x(F) y(E\F) X^{r(G)-r(F)} Y^{n(F)} Z^{k(F)-bc(F)+n(F)}.
Poly bollobas_riordan(const RibbonGraph& g, const EnumerationOptions& opts = {});

// Signed version: positive edges get unit weights, negative edges get
// x = (X/Y)^(1/2), y = (Y/X)^(1/2). Every edge must carry a sign.
Poly signed_br(const RibbonGraph& g, const EnumerationOptions& opts = {});
// Godsil-Royle convention: x+ = beta, y+ = alpha, x- = alpha, y- = beta,
// then Z := 1 and X, Y renamed to x, y.
Poly signed_br_godsil_royle(const RibbonGraph& g, const Poly& alpha, const Poly& beta,
                            const EnumerationOptions& opts = {});

// Z_G(a, b, c) = sum_F a^k(F) prod_{e in F} b_e c^bc(F).
Poly dichromatic_br(const RibbonGraph& g, const std::vector<Poly>& b, const EnumerationOptions& opts = {});

// Reduced length of a cyclic arrow word after cancelling adjacent pairs with
// equal direction. c(f) is half of it.
int arrow_reduce_length(const ArrowWord& word);
Rational arrow_reduce(const ArrowWord& word);

// Arrow words read along each boundary component of (V, F), in walk order.
std::vector<ArrowWord> boundary_arrow_words(const RibbonGraph& g, EdgeSet f);

// BR with an extra factor prod_f K_{c(f)} over boundary components of F.
Poly arrow_br(const RibbonGraph& g, const EnumerationOptions& opts = {});

// Krushkal polynomial of the embedded pair (parent, live edges):
// sum_F X^{k(F)-k(G)} Y^{k(F*)-k(P)} A^{s(F)/2} B^{s(F*)/2}, F over subsets of
// the live edges and F* the spanning subgraph of the parent's dual with the
// duals of E(P)\F.
Poly krushkal(const RibbonGraph& parent, const EnumerationOptions& opts = {});

// The parent's dual with phantom flags cleared; edges correspond by index.
RibbonGraph surface_dual(const RibbonGraph& parent);

// A live loop whose dual is a bridge of the parent's dual, i.e. a loop
// separating the surface.
bool is_separable_loop(const RibbonGraph& parent, int e);

// Las Vergnas polynomial of the perspective (C(G*))* -> C(G).
Poly las_vergnas(const RibbonGraph& g, const EnumerationOptions& opts = {});

}  // namespace topotutte
