#pragma once

#include <utility>
#include <vector>

#include "cei/graph.hpp"
#include "cei/monomial.hpp"

namespace cei {

// Vertex v of a graph corresponds to variable x_v (index v-1).

MonomialIdeal edge_ideal(const Graph& g);

// (x_[n] / x_i x_j : {i,j} in E(G)); generated in degree n-2.
MonomialIdeal comp_edge_ideal(const Graph& g);

// Alexander dual of comp_edge_ideal. Requires n >= 3 and an edge.
MonomialIdeal comp_cover_ideal(const Graph& g);

// Intersection of P_{[n] \ {i,j}} over the edges; independent route to
// comp_cover_ideal.
MonomialIdeal comp_cover_ideal_by_intersection(const Graph& g);

// (x_F : F a t-clique of G).
MonomialIdeal clique_ideal(const Graph& g, int t);

// All squarefree monomials of degree d in n variables.
MonomialIdeal veronese(int n, int d);

// Minimal primes of comp_edge_ideal, built from the graph and checked by
// intersection at construction.
class PrimaryDecomposition {
 public:
  // Throws std::logic_error when the components are comparable or do not
  // intersect to `target`.
  PrimaryDecomposition(std::vector<PrimeSupport> components, const MonomialIdeal& target);

  const std::vector<PrimeSupport>& components() const& { return components_; }
  std::vector<PrimeSupport> components() && { return std::move(components_); }

 private:
  std::vector<PrimeSupport> components_;
};

// Closed form for graphs without isolated vertices: the non-edges {i,j}
// and the triangles. Graphs with isolated vertices are reduced to the
// subgraph H on the non-isolated vertices, I_c(G) = x_iso * I_c(H), and
// each isolated vertex contributes its singleton prime. An empty list
// means the unit ideal (G = K_2).
PrimaryDecomposition primary_decomposition_ic(const Graph& g);

// Krull dimension of S/I_c(G): n-3 for complete graphs, n-2 otherwise.
// Requires no isolated vertices.
int dim_ic(const Graph& g);

}  // namespace cei
