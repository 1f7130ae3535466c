#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cei/graph.hpp"
#include "cei/linear_algebra.hpp"
#include "cei/monomial.hpp"
#include "cei/resolutions.hpp"

namespace cei {

// Exchange property: for u, v in G(a) and i with deg_i(u) > deg_i(v) there
// is j with deg_j(u) < deg_j(v) and x_j (u / x_i) in G(a). Matroidal means
// squarefree, equigenerated and exchange-closed.
bool is_matroidal(const MonomialIdeal& a);

// For u, v in G(a) and i with deg_i(u) < deg_i(v) there is j with
// deg_j(u) > deg_j(v) and x_i (u / x_j) in G(a).
bool satisfies_dual_exchange(const MonomialIdeal& a);

// is_matroidal(a) == is_matroidal(complementary_ideal(a)).
bool matroidal_involution_check(const MonomialIdeal& a);

// Verdicts for S/I_c(G). Graph-side verdicts come from the structural
// criteria; the homological fields recompute what can be recomputed.
//
// G = K_2 gives I_c(G) = (1). S/(1) is the zero ring; we report it as
// Cohen-Macaulay and Gorenstein (it belongs to the finite lists) with
// dim = -1, and skip the homological checks.
struct ClassificationReport {
  Graph graph;
  bool sequentially_cm = false;
  bool cohen_macaulay = false;
  bool gorenstein = false;
  bool nearly_gorenstein = false;  // list lookup only
  bool unmixed = false;
  bool matroidal_ic = false;
  bool matroidal_edge = false;
  bool complete_multipartite = false;
  int dim = 0;

  // Homological recomputation; empty when not applicable (unit ideal).
  std::optional<bool> sequentially_cm_homological;  // J_c(G) componentwise linear
  std::optional<bool> cohen_macaulay_homological;   // depth S/I_c(G) = dim
  std::optional<bool> gorenstein_homological;       // CM and last total Betti number 1
  std::optional<bool> unmixed_homological;          // equal heights of the minimal primes

  std::vector<std::pair<std::string, std::string>> witnesses;

  // Graph-side and homological verdicts agree, and the implication chain
  // gorenstein => nearly_gorenstein => cohen_macaulay => sequentially_cm holds.
  bool consistent() const;
};

// Requires no isolated vertices and at least one edge.
ClassificationReport classify(const Graph& g, const FieldSpec& field);

// Membership in {K_2, K_3, 2K_2, P_3} up to relabeling.
bool is_gorenstein_graph(const Graph& g);
// Membership in {K_2, K_3, 2K_2, K_4, P_3, P_4} up to relabeling.
bool is_nearly_gorenstein_graph(const Graph& g);

struct ChordalOrder {
  VertexOrder elimination;         // perfect elimination order used for relabeling
  std::vector<Monomial> gens;      // generators of J_c(G) in linear-quotients order
  std::vector<std::size_t> order;  // the same order as indices into J_c(G).gens()
  bool verified = false;           // verify_linear_quotients_order accepted it
};

// Relabels by a perfect elimination order, then lists G(I(G^c)) followed by
// G(K_3(G)), each lexicographically decreasing for x_1 > ... > x_n, and
// maps back to the original labels. Requires g chordal, no isolated
// vertices, at least one edge and n >= 3.
ChordalOrder chordal_lq_order(const Graph& g);

enum class RegularityRegime { BelowThreshold, AtOrAboveThreshold };

struct RegularityForecast {
  int k = 1;
  int predicted_reg = 0;
  RegularityRegime regime = RegularityRegime::AtOrAboveThreshold;
  int rstab = 1;  // max(1, c(G) - 1)
};

// reg I_c(G)^k = (n-1)k for 1 <= k <= c-2 and (n-2)k + c - 1 for k >= c-1.
RegularityForecast reg_power_forecast(const Graph& g, int k);

// reg of J_c(G)^k (equally of the symbolic power) by girth: 3k for girth 3,
// 2k+1 for girth 4, 2k for forests, and for girth >= 5: 3 at k = 1, 2k
// beyond. Requires no isolated vertices and at least two edges.
int reg_jc_power_forecast(const Graph& g, int k, bool symbolic);

// G(whole) must be the disjoint union of G(part1) and G(part2). True iff
// beta_{i,j}(whole) = beta_{i,j}(part1) + beta_{i,j}(part2)
//                     + beta_{i-1,j}(part1 ∩ part2) in every slot.
bool betti_splitting_check(const MonomialIdeal& whole, const MonomialIdeal& part1,
                           const MonomialIdeal& part2, const FieldSpec& field);

struct LadderStep {
  int ell = 0;
  bool intersection_matches = false;  // J_{l-1} ∩ T_l equals the closed form
  bool is_splitting = false;          // Betti identity holds for J_l = J_{l-1} + T_l
};

struct LadderReport {
  VertexMask part1 = 0;  // vertices of G_1
  VertexMask part2 = 0;  // vertices of G_2 together with isolated vertices
  int k = 1;
  std::vector<LadderStep> steps;
  bool final_matches = false;  // J_k = I_c(G)^k

  bool all_pass() const;
};

// Writes I_c(G) = y I_1 + x I_2 where G_2 is the component holding the
// highest-numbered non-isolated vertex, x and y are the products of the
// variables of G_1 and of the rest, and walks the ladder
// J_l = sum_{h<=l} y^{k-h} x^h I_1^{k-h} I_2^h for l = 1..k.
// Requires c(G) >= 2.
LadderReport power_splitting_ladder(const Graph& g, int k, const FieldSpec& field);

struct ProbeRow {
  int k = 1;
  std::optional<bool> jc_power_componentwise_linear;  // chordal graphs only
  int depth_jc_power = 0;
  int depth_jc_symbolic = 0;
  std::optional<int> reg_ic_power;     // absent when I_c(G) is the unit ideal
  std::optional<int> reg_ic_symbolic;
};

// Observations for k = 1..kmax; no verdicts. Requires n >= 3 and an edge.
std::vector<ProbeRow> probe_open_questions(const Graph& g, int kmax, const FieldSpec& field);

}  // namespace cei
