#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cei/error.hpp"
#include "cei/graph_ideals.hpp"
#include "cei/structure.hpp"
#include "support/oracles.hpp"

using namespace cei;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
const Graph kPaw(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});
const Graph kTwoK2(4, {{1, 2}, {3, 4}});

Graph k_m_n(int m, int n) {
  const std::vector<int> parts{m, n};
  return complete_multipartite_graph(parts);
}

}  // namespace

TEST_CASE("matroidal ideals") {
  CHECK(is_matroidal(edge_ideal(cycle_graph(4))));
  CHECK_FALSE(is_matroidal(edge_ideal(path_graph(4))));
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= n; ++d) CHECK(is_matroidal(veronese(n, d)));
  CHECK(is_matroidal(edge_ideal(k_m_n(2, 3))));
  CHECK(is_matroidal(comp_edge_ideal(k_m_n(2, 3))));
  const auto example = ideal_of(5, {{1, 1, 1, 0, 0}, {1, 1, 0, 0, 1}, {1, 0, 0, 1, 1}, {0, 0, 1, 1, 1}});
  CHECK_FALSE(is_matroidal(example));
  CHECK_FALSE(is_matroidal(complementary_ideal(example)));
  CHECK_FALSE(is_matroidal(ideal_of(2, {{2, 0}})));
  CHECK_FALSE(satisfies_dual_exchange(edge_ideal(path_graph(4))));
  CHECK(satisfies_dual_exchange(ideal_of(3, {{1, 1, 0}})));
}

TEST_CASE("matroidal agrees with the exchange axiom; dual exchange and complement follow") {
  oracle::Gen gen(51);
  int matroidal_seen = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = gen.uniform(2, 6);
    const int d = gen.uniform(1, n);
    std::vector<Monomial> raw;
    const int count = gen.uniform(1, 8);
    for (int i = 0; i < count; ++i) {
      std::uint32_t f = 0;
      while (std::popcount(f) != d) f = static_cast<std::uint32_t>(gen.uniform(0, (1 << n) - 1));
      raw.push_back(Monomial::from_support(n, f));
    }
    const auto a = minimalize(n, raw);
    const bool m = is_matroidal(a);
    CHECK(m == oracle::matroidal(a));
    CHECK(matroidal_involution_check(a));
    if (m) {
      ++matroidal_seen;
      CHECK(satisfies_dual_exchange(a));
    }
  }
  CHECK(matroidal_seen > 20);
}

TEST_CASE("classification of small graphs") {
  SUBCASE("P_4") {
    const auto r = classify(path_graph(4), kQ);
    CHECK(r.sequentially_cm);
    CHECK(r.cohen_macaulay);
    CHECK_FALSE(r.gorenstein);
    CHECK(r.nearly_gorenstein);
    CHECK(r.consistent());
    CHECK(r.dim == 2);
  }
  SUBCASE("K_4") {
    const auto r = classify(complete_graph(4), kQ);
    CHECK(r.cohen_macaulay);
    CHECK_FALSE(r.gorenstein);
    CHECK(r.nearly_gorenstein);
    CHECK(r.consistent());
  }
  SUBCASE("C_4") {
    const auto r = classify(cycle_graph(4), kQ);
    CHECK_FALSE(r.sequentially_cm);
    CHECK(r.unmixed);
    CHECK(r.matroidal_ic);
    CHECK(r.matroidal_edge);
    CHECK(r.consistent());
    const auto it = std::find_if(r.witnesses.begin(), r.witnesses.end(),
                                 [](const auto& w) { return w.first == "nearly_gorenstein"; });
    REQUIRE(it != r.witnesses.end());
    CHECK(it->second.find("classification-only") != std::string::npos);
  }
  SUBCASE("K_2 gives the unit ideal") {
    const auto r = classify(complete_graph(2), kQ);
    CHECK(r.gorenstein);
    CHECK(r.dim == -1);
    CHECK_FALSE(r.cohen_macaulay_homological.has_value());
  }
  CHECK_THROWS_AS(classify(empty_graph(3), kQ), InvalidInput);
  CHECK_THROWS_AS(classify(Graph(3, {{1, 2}}), kQ), InvalidInput);
}

TEST_CASE("Gorenstein lists up to relabeling") {
  CHECK(is_gorenstein_graph(Graph(3, {{1, 3}, {3, 2}})));
  CHECK(is_gorenstein_graph(Graph(4, {{1, 3}, {2, 4}})));
  CHECK_FALSE(is_gorenstein_graph(path_graph(4)));
  CHECK(is_nearly_gorenstein_graph(Graph(4, {{2, 4}, {4, 1}, {1, 3}})));
  CHECK(is_nearly_gorenstein_graph(complete_graph(4)));
  CHECK_FALSE(is_nearly_gorenstein_graph(cycle_graph(4)));
}

TEST_CASE("linear-quotients order for chordal graphs") {
  for (int n = 3; n <= 6; ++n) {
    const auto r = chordal_lq_order(complete_graph(n));
    CHECK(r.verified);
    CHECK(r.gens.size() == veronese(n, 3).size());
  }
  const auto paw = chordal_lq_order(kPaw);
  CHECK(paw.verified);
  CHECK(paw.gens.back() == Monomial(4, {1, 1, 1, 0}));
  CHECK(oracle::linear_quotients(paw.gens));
  CHECK_THROWS_AS(chordal_lq_order(cycle_graph(4)), InvalidInput);
  // every labeled tree on up to 7 vertices
  for (int n = 3; n <= 7; ++n) {
    GraphEnumeration(n, true).for_each([&](const Graph& g) {
      if (static_cast<int>(g.size()) != n - 1 || !oracle::forest(g)) return;
      const auto r = chordal_lq_order(g);
      CHECK(r.verified);
      CHECK(oracle::linear_quotients(r.gens));
    });
  }
}

TEST_CASE("regularity forecasts") {
  CHECK(reg_power_forecast(path_graph(5), 3).predicted_reg == 9);
  const Graph three_k2 = disjoint_union(kTwoK2, complete_graph(2));
  CHECK(reg_power_forecast(three_k2, 1).predicted_reg == 5);
  CHECK(reg_power_forecast(three_k2, 1).regime == RegularityRegime::BelowThreshold);
  CHECK(reg_power_forecast(three_k2, 2).predicted_reg == 10);
  CHECK(reg_power_forecast(three_k2, 2).rstab == 2);
  CHECK(reg_power_forecast(kTwoK2, 2).predicted_reg == 5);
  CHECK(reg_jc_power_forecast(kPaw, 2, false) == 6);
  CHECK(reg_jc_power_forecast(path_graph(4), 1, false) == 2);
  CHECK(reg_jc_power_forecast(cycle_graph(4), 2, true) == 5);
  CHECK(reg_jc_power_forecast(cycle_graph(5), 1, false) == 3);
  CHECK(reg_jc_power_forecast(cycle_graph(5), 2, false) == 4);
  CHECK_THROWS_AS(reg_jc_power_forecast(complete_graph(2), 1, false), InvalidInput);
}

TEST_CASE("forecasts agree with computed regularity on small graphs") {
  const Graph p3k2 = disjoint_union(path_graph(3), complete_graph(2));
  for (const Graph& g : {kTwoK2, p3k2, path_graph(4), kPaw, cycle_graph(5)}) {
    for (int k = 1; k <= 2; ++k) {
      CHECK(regularity(power(comp_edge_ideal(g), k), kF2) == reg_power_forecast(g, k).predicted_reg);
    }
  }
  for (const Graph& g : {kPaw, cycle_graph(4), cycle_graph(5), path_graph(4)}) {
    for (int k = 1; k <= 2; ++k) {
      CHECK(regularity(power(comp_cover_ideal(g), k), kF2) == reg_jc_power_forecast(g, k, false));
      CHECK(regularity(symbolic_power(comp_cover_ideal(g), k), kF2) == reg_jc_power_forecast(g, k, true));
    }
  }
}

TEST_CASE("Betti splittings") {
  const auto i1 = ideal_of(4, {{1, 1, 0, 0}});
  const auto i2 = ideal_of(4, {{0, 0, 1, 1}});
  CHECK(betti_splitting_check(sum(i1, i2), i1, i2, kQ));
  const auto bad = ideal_of(4, {{1, 0, 0, 0}});
  CHECK_THROWS_AS(betti_splitting_check(sum(i1, i2), i1, bad, kQ), InvalidInput);
  // a partition of I_{4,2}: reported, not asserted
  const auto v = veronese(4, 2);
  std::vector<Monomial> a(v.gens().begin(), v.gens().begin() + 3), b(v.gens().begin() + 3, v.gens().end());
  CHECK_NOTHROW(betti_splitting_check(v, minimalize(4, a), minimalize(4, b), kQ));
}

TEST_CASE("power splitting ladder") {
  const auto two = power_splitting_ladder(kTwoK2, 2, kQ);
  CHECK(two.all_pass());
  CHECK(two.steps.size() == 2);
  CHECK(two.part2 == 0b1100u);
  const Graph p3k2 = disjoint_union(path_graph(3), complete_graph(2));
  for (int k = 1; k <= 3; ++k) CHECK(power_splitting_ladder(p3k2, k, kF2).all_pass());
  const Graph three_k2 = disjoint_union(kTwoK2, complete_graph(2));
  CHECK(power_splitting_ladder(three_k2, 1, kF2).all_pass());
  CHECK_THROWS_AS(power_splitting_ladder(path_graph(4), 1, kQ), InvalidInput);
}

TEST_CASE("open-question probe") {
  const auto rows = probe_open_questions(kPaw, 2, kF2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].jc_power_componentwise_linear.value_or(false));
  const auto k3 = probe_open_questions(complete_graph(3), 3, kQ);
  for (const auto& r : k3) CHECK(r.reg_ic_power == r.reg_ic_symbolic);
  const auto c4 = probe_open_questions(cycle_graph(4), 1, kQ);
  CHECK_FALSE(c4[0].jc_power_componentwise_linear.has_value());
}
