#pragma once

#include <vector>

#include "bicay/graph.hpp"
#include "bicay/group.hpp"

namespace bicay {

// Shared context for the dedicated family over Z_{p^2 q^2} with distinct
// primes p and q. Throughout, k = max(p, q), m = min(p, q), n = p^2 q^2,
// and the "side-0 graph" / "side-1 graph" are the subgraphs induced on the
// two sides of the bi-Cayley graph built from the canonical connection sets
// (order-p-or-q differences on side 0, order-p^2-or-q^2 on side 1, and a
// perfect matching across).
struct P2Q2Context {
  int p = 0;
  int q = 0;
  int n = 0;  // p^2 q^2
  int k = 0;  // max(p, q)
  int m = 0;  // min(p, q)
  FiniteGroup group;
  ConnectionSet s1, s2, s3;
};

P2Q2Context make_p2q2_context(int p, int q, int cap = kDefaultGroupCap);

// Proper k-coloring of the side-0 graph: color(g) = floor(g / (n/k)) mod k,
// i.e. consecutive blocks of width n/k = k m^2 cycle through the colors.
std::vector<int> gamma0_coloring(const P2Q2Context& ctx);

// Proper k-coloring of the side-1 graph:
// color(g) = ((g mod p) + (g mod q)) mod k.
std::vector<int> gamma1_coloring(const P2Q2Context& ctx);

// Proper (k+1)-coloring of the whole graph, indexed by graph vertex:
// side 1 keeps the side-1 coloring; side 0 keeps the side-0 coloring except
// where the two colorings agree, and those vertices take the extra color k.
std::vector<int> full_coloring(const P2Q2Context& ctx);

// The coset g + K of the order-k subgroup K: a maximum clique of the
// side-0 graph (k elements, sorted). Every such coset sees all k colors of
// the side-0 coloring.
std::vector<int> coset_clique(const P2Q2Context& ctx, int g);

// Maximum clique of the side-1 graph: the k CRT merges whose max-prime
// coordinate runs over 0..k-1 while the other coordinate stays 0. Sorted.
std::vector<int> gamma1_clique(const P2Q2Context& ctx);

// Vertex set of the side-0 component containing merge(i, j), written as the
// CRT grid {merge(i + a p mod p^2, j + b q mod q^2) : a < p, b < q}.
// Requires 0 <= i < p, 0 <= j < q. Each such set is independent in the
// side-1 graph. Sorted, p q elements.
std::vector<int> component_elements(const P2Q2Context& ctx, int i, int j);

// Maximum independent set of that side-0 component: the diagonal
// transversal {merge(i + t p mod p^2, j + t q mod q^2) : t < m}. Sorted.
std::vector<int> component_transversal(const P2Q2Context& ctx, int i, int j);

// Maximum independent set of the side-0 graph: one diagonal transversal in
// each of the p q components; p q m elements in total.
std::vector<int> gamma0_independent_max(const P2Q2Context& ctx);

// Maximum independent set of the side-1 graph: the union of the m diagonal
// components (i = j < m); p q m elements.
std::vector<int> gamma1_independent_max(const P2Q2Context& ctx);

// Maximum independent set of the whole graph, as graph vertex indices:
// the side-1 set above plus a diagonal transversal of every non-diagonal
// component on side 0; 2 p q m - m^2 vertices.
std::vector<int> joint_independent_max(const P2Q2Context& ctx);

// Model graphs and explicit isomorphisms onto them.
//
// Each side-0 component is a rook's graph: the cartesian product of
// complete graphs K_p and K_q.
LabeledGraph component_model(const P2Q2Context& ctx);
// Mapping from model vertex (i, j) (index i*q + j) to the group element of
// the component containing `base`: (i, j) -> merge(base_p + i p, base_q + j q).
std::vector<int> component_isomorphism(const P2Q2Context& ctx, int base);

// The side-1 graph is the cartesian product of the complete multipartite
// graphs with p parts of size p and q parts of size q.
LabeledGraph gamma1_model(const P2Q2Context& ctx);
// Mapping from group element g to the model vertex index.
std::vector<int> gamma1_isomorphism(const P2Q2Context& ctx);

}  // namespace bicay
