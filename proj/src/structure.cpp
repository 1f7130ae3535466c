#include "cei/structure.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cei/error.hpp"
#include "cei/graph_ideals.hpp"

namespace cei {

namespace {

using GenSet = std::unordered_set<Monomial, MonomialHash>;

GenSet gen_set(const MonomialIdeal& a) { return GenSet(a.gens().begin(), a.gens().end()); }

// x_j * (u / x_i) when x_i divides u.
Monomial swap_variable(const Monomial& u, int remove, int add) {
  Monomial m = u;
  m.set(remove, m[remove] - 1);
  m.set(add, m[add] + 1);
  return m;
}

}  // namespace

bool is_matroidal(const MonomialIdeal& a) {
  if (a.is_zero()) throw InvalidInput("is_matroidal needs a nonzero ideal");
  if (!a.is_squarefree() || !a.is_equigenerated()) return false;
  const GenSet gens = gen_set(a);
  const int n = a.ambient();
  for (const auto& u : a.gens()) {
    for (const auto& v : a.gens()) {
      for (int i = 0; i < n; ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          found = u[j] < v[j] && gens.count(swap_variable(u, i, j)) != 0;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool satisfies_dual_exchange(const MonomialIdeal& a) {
  if (a.is_zero()) throw InvalidInput("satisfies_dual_exchange needs a nonzero ideal");
  const GenSet gens = gen_set(a);
  const int n = a.ambient();
  for (const auto& u : a.gens()) {
    for (const auto& v : a.gens()) {
      for (int i = 0; i < n; ++i) {
        if (u[i] >= v[i]) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          found = u[j] > v[j] && gens.count(swap_variable(u, j, i)) != 0;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool matroidal_involution_check(const MonomialIdeal& a) {
  if (a.is_zero() || !a.is_squarefree()) {
    throw InvalidInput("matroidal_involution_check needs a nonzero squarefree ideal");
  }
  return is_matroidal(a) == is_matroidal(complementary_ideal(a));
}

namespace {

Graph two_k2() { return disjoint_union(complete_graph(2), complete_graph(2)); }

bool matches_any(const Graph& g, const std::vector<Graph>& list) {
  return std::any_of(list.begin(), list.end(), [&](const Graph& h) {
    return h.order() == g.order() && h.size() == g.size() && isomorphic(g, h);
  });
}

std::string join_order(const VertexOrder& o) {
  std::ostringstream os;
  for (std::size_t i = 0; i < o.order.size(); ++i) os << (i ? "," : "") << o.order[i];
  return os.str();
}

}  // namespace

bool is_gorenstein_graph(const Graph& g) {
  static const std::vector<Graph> list = {complete_graph(2), complete_graph(3), two_k2(), path_graph(3)};
  return matches_any(g, list);
}

bool is_nearly_gorenstein_graph(const Graph& g) {
  static const std::vector<Graph> list = {complete_graph(2), complete_graph(3), two_k2(),
                                          complete_graph(4), path_graph(3),     path_graph(4)};
  return matches_any(g, list);
}

bool ClassificationReport::consistent() const {
  auto agrees = [](const std::optional<bool>& h, bool v) { return !h || *h == v; };
  if (!agrees(sequentially_cm_homological, sequentially_cm)) return false;
  if (!agrees(cohen_macaulay_homological, cohen_macaulay)) return false;
  if (!agrees(gorenstein_homological, gorenstein)) return false;
  if (!agrees(unmixed_homological, unmixed)) return false;
  if (matroidal_ic != matroidal_edge || matroidal_ic != complete_multipartite) return false;
  if (gorenstein && !nearly_gorenstein) return false;
  if (nearly_gorenstein && !cohen_macaulay) return false;
  if (cohen_macaulay && !sequentially_cm) return false;
  return true;
}

ClassificationReport classify(const Graph& g, const FieldSpec& field) {
  if (g.size() == 0 || g.has_isolated_vertex()) {
    throw InvalidInput("classify needs a graph with an edge and no isolated vertices");
  }
  ClassificationReport r;
  r.graph = g;
  const auto peo = perfect_elimination_order(g);
  const bool complete = is_complete(g);
  const bool forest = is_forest(g);
  const auto triangles = cliques(g, 3);
  MultipartiteWitness parts;

  r.sequentially_cm = peo.has_value();
  r.cohen_macaulay = complete || forest;
  r.gorenstein = is_gorenstein_graph(g);
  r.nearly_gorenstein = is_nearly_gorenstein_graph(g);
  r.unmixed = complete || triangles.empty();
  r.complete_multipartite = is_complete_multipartite(g, &parts);
  r.dim = dim_ic(g);

  const MonomialIdeal ic = comp_edge_ideal(g);
  r.matroidal_ic = is_matroidal(ic);
  r.matroidal_edge = is_matroidal(edge_ideal(g));

  r.witnesses.emplace_back("sequentially_cm", peo ? "chordal, elimination order " + join_order(*peo)
                                                  : "not chordal");
  r.witnesses.emplace_back("cohen_macaulay", complete ? "complete graph"
                                             : forest ? "forest"
                                                      : "neither complete nor a forest");
  r.witnesses.emplace_back("gorenstein", r.gorenstein ? "isomorphic to one of K2, K3, 2K2, P3"
                                                      : "not in {K2, K3, 2K2, P3}");
  r.witnesses.emplace_back("nearly_gorenstein",
                           std::string(r.nearly_gorenstein ? "in" : "not in") +
                               " {K2, K3, 2K2, K4, P3, P4}; classification-only, no trace computation");
  r.witnesses.emplace_back("unmixed", complete ? "complete graph"
                                      : triangles.empty() ? "triangle-free"
                                                          : std::to_string(triangles.size()) + " triangle(s)");
  {
    std::ostringstream os;
    if (r.complete_multipartite) {
      os << "complete multipartite, parts";
      for (VertexMask p : parts.parts) {
        os << " {";
        bool first = true;
        for (VertexMask q = p; q != 0; q &= q - 1) {
          os << (first ? "" : ",") << std::countr_zero(q) + 1;
          first = false;
        }
        os << "}";
      }
    } else {
      os << "complement has an induced P3";
    }
    r.witnesses.emplace_back("matroidal", os.str());
  }

  if (ic.is_unit()) {
    r.witnesses.emplace_back("homological", "I_c(G) is the unit ideal; checks skipped");
    return r;
  }
  const BettiTable table = betti_table(ic, field);
  const bool cm = table.depth_quotient() == r.dim;
  r.cohen_macaulay_homological = cm;
  r.gorenstein_homological = cm && table.total(table.proj_dim()) == 1;
  r.sequentially_cm_homological = is_componentwise_linear(comp_cover_ideal(g), field);
  const auto primes = squarefree_minimal_primes(ic);
  r.unmixed_homological = std::all_of(primes.begin(), primes.end(), [&](const PrimeSupport& p) {
    return p.height() == primes.front().height();
  });
  std::ostringstream os;
  os << "depth " << table.depth_quotient() << ", dim " << r.dim << ", type "
     << table.total(table.proj_dim()) << ", over " << field.to_string();
  r.witnesses.emplace_back("homological", os.str());
  return r;
}

namespace {

bool lex_greater(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.ambient(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

std::vector<Monomial> lex_decreasing(const MonomialIdeal& a) {
  std::vector<Monomial> out = a.gens();
  std::sort(out.begin(), out.end(), lex_greater);
  return out;
}

Monomial monomial_power(const Monomial& m, int e) {
  Monomial out(m.ambient());
  for (int i = 0; i < e; ++i) out = out * m;
  return out;
}

}  // namespace

ChordalOrder chordal_lq_order(const Graph& g) {
  if (g.size() == 0 || g.has_isolated_vertex() || g.order() < 3) {
    throw InvalidInput("chordal_lq_order needs n >= 3, an edge and no isolated vertices");
  }
  const auto peo = perfect_elimination_order(g);
  if (!peo) throw InvalidInput("chordal_lq_order needs a chordal graph");
  const int n = g.order();
  std::vector<int> position(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(peo->order[static_cast<std::size_t>(i)])] = i + 1;
  Graph h(n);
  for (auto [u, v] : g.edges()) h.add_edge(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);

  std::vector<Monomial> relabeled = lex_decreasing(edge_ideal(complement(h)));
  for (const auto& m : lex_decreasing(clique_ideal(h, 3))) relabeled.push_back(m);

  ChordalOrder out;
  out.elimination = *peo;
  const MonomialIdeal jc = comp_cover_ideal(g);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < jc.size(); ++i) index[jc.gens()[i]] = i;
  for (const auto& m : relabeled) {
    Monomial back(n);
    for (int i = 0; i < n; ++i) back.set(peo->order[static_cast<std::size_t>(i)] - 1, m[i]);
    auto it = index.find(back);
    if (it == index.end()) {
      throw std::logic_error("constructed generator " + to_string(back) + " is not a generator of J_c(G)");
    }
    out.gens.push_back(back);
    out.order.push_back(it->second);
  }
  if (out.order.size() != jc.size()) {
    throw std::logic_error("constructed order does not cover every generator of J_c(G)");
  }
  out.verified = verify_linear_quotients_order(jc, out.order);
  return out;
}

RegularityForecast reg_power_forecast(const Graph& g, int k) {
  if (g.size() == 0) throw InvalidInput("reg_power_forecast needs a graph with an edge");
  if (k < 1) throw InvalidInput("power must be at least 1");
  const int n = g.order();
  const int c = non_isolated_component_count(g);
  RegularityForecast f;
  f.k = k;
  f.rstab = std::max(1, c - 1);
  if (k <= c - 2) {
    f.regime = RegularityRegime::BelowThreshold;
    f.predicted_reg = (n - 1) * k;
  } else {
    f.regime = RegularityRegime::AtOrAboveThreshold;
    f.predicted_reg = (n - 2) * k + c - 1;
  }
  return f;
}

int reg_jc_power_forecast(const Graph& g, int k, bool /*symbolic*/) {
  if (g.has_isolated_vertex() || g.size() < 2) {
    throw InvalidInput("reg_jc_power_forecast needs no isolated vertices and at least two edges");
  }
  if (k < 1) throw InvalidInput("power must be at least 1");
  const int gi = girth(g);
  if (gi == 3) return 3 * k;
  if (gi == 4) return 2 * k + 1;
  if (gi == kInfiniteGirth) return 2 * k;
  return k == 1 ? 3 : 2 * k;
}

bool betti_splitting_check(const MonomialIdeal& whole, const MonomialIdeal& part1,
                           const MonomialIdeal& part2, const FieldSpec& field) {
  if (whole.ambient() != part1.ambient() || whole.ambient() != part2.ambient()) {
    throw InvalidInput("ambient mismatch in splitting check");
  }
  std::vector<Monomial> joined = part1.gens();
  joined.insert(joined.end(), part2.gens().begin(), part2.gens().end());
  std::sort(joined.begin(), joined.end(), canonical_less);
  if (part1.is_zero() || part2.is_zero() || std::adjacent_find(joined.begin(), joined.end()) != joined.end() ||
      joined != whole.gens()) {
    throw InvalidInput("generators of the whole ideal are not the disjoint union of the parts");
  }
  const BettiTable b = betti_table_general(whole, field);
  const BettiTable b1 = betti_table_general(part1, field);
  const BettiTable b2 = betti_table_general(part2, field);
  const BettiTable b12 = betti_table_general(intersect(part1, part2), field);
  std::set<std::pair<int, int>> slots;
  for (const auto* t : {&b, &b1, &b2}) {
    for (const auto& [key, count] : t->entries()) slots.insert(key);
  }
  for (const auto& [key, count] : b12.entries()) slots.insert({key.first + 1, key.second});
  for (auto [i, j] : slots) {
    if (b.at(i, j) != b1.at(i, j) + b2.at(i, j) + b12.at(i - 1, j)) return false;
  }
  return true;
}

bool LadderReport::all_pass() const {
  return final_matches && std::all_of(steps.begin(), steps.end(), [](const LadderStep& s) {
           return s.intersection_matches && s.is_splitting;
         });
}

LadderReport power_splitting_ladder(const Graph& g, int k, const FieldSpec& field) {
  const int c = non_isolated_component_count(g);
  if (c < 2) throw InvalidInput("the splitting ladder needs at least two non-isolated components");
  if (k < 1) throw InvalidInput("power must be at least 1");
  const int n = g.order();
  // G_2 is the component holding the highest-numbered non-isolated vertex.
  int highest = 0;
  for (int v = n; v >= 1 && highest == 0; --v) {
    if (!g.is_isolated(v)) highest = v;
  }
  VertexMask top = 0;
  for (VertexMask comp : connected_components(g)) {
    if (comp & (VertexMask{1} << (highest - 1))) top = comp;
  }
  LadderReport r;
  r.k = k;
  r.part1 = 0;
  for (VertexMask comp : connected_components(g)) {
    if (std::popcount(comp) >= 2 && comp != top) r.part1 |= comp;
  }
  r.part2 = g.all_vertices() & ~r.part1;

  auto partial_complement = [&](VertexMask side) {
    const Monomial whole = Monomial::from_support(n, side);
    std::vector<Monomial> raw;
    for (auto [i, j] : g.edges()) {
      const VertexMask e = (VertexMask{1} << (i - 1)) | (VertexMask{1} << (j - 1));
      if ((e & ~side) == 0) raw.push_back(whole / Monomial::from_support(n, e));
    }
    return minimalize(n, std::move(raw));
  };
  const MonomialIdeal i1 = partial_complement(r.part1);
  const MonomialIdeal i2 = partial_complement(r.part2);
  const Monomial x = Monomial::from_support(n, r.part1);
  const Monomial y = Monomial::from_support(n, r.part2);

  auto term = [&](int ell) {
    return product(monomial_power(y, k - ell) * monomial_power(x, ell),
                   product(power(i1, k - ell), power(i2, ell)));
  };
  MonomialIdeal j = term(0);
  for (int ell = 1; ell <= k; ++ell) {
    const MonomialIdeal t = term(ell);
    const MonomialIdeal closed = product(monomial_power(y, k - ell + 1) * monomial_power(x, ell),
                                         product(power(i2, ell - 1), power(i1, k - ell)));
    LadderStep step;
    step.ell = ell;
    step.intersection_matches = intersect(j, t) == closed;
    const MonomialIdeal next = sum(j, t);
    try {
      step.is_splitting = betti_splitting_check(next, j, t, field);
    } catch (const InvalidInput&) {
      step.is_splitting = false;
    }
    r.steps.push_back(step);
    j = next;
  }
  r.final_matches = j == power(comp_edge_ideal(g), k);
  return r;
}

std::vector<ProbeRow> probe_open_questions(const Graph& g, int kmax, const FieldSpec& field) {
  if (kmax < 1) throw InvalidInput("kmax must be at least 1");
  const MonomialIdeal jc = comp_cover_ideal(g);
  const MonomialIdeal ic = comp_edge_ideal(g);
  const bool chordal = is_chordal(g);
  std::vector<ProbeRow> rows;
  for (int k = 1; k <= kmax; ++k) {
    ProbeRow row;
    row.k = k;
    const MonomialIdeal jk = power(jc, k);
    if (chordal) row.jc_power_componentwise_linear = is_componentwise_linear(jk, field);
    row.depth_jc_power = betti_table(jk, field).depth_quotient();
    row.depth_jc_symbolic = betti_table(symbolic_power(jc, k), field).depth_quotient();
    if (!ic.is_unit()) {
      row.reg_ic_power = betti_table(power(ic, k), field).regularity();
      row.reg_ic_symbolic = betti_table(symbolic_power(ic, k), field).regularity();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cei
