#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cei/error.hpp"
#include "cei/graph_ideals.hpp"
#include "support/oracles.hpp"

using namespace cei;

namespace {

const Graph kPaw(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}});

std::vector<std::uint32_t> prime_masks(const std::vector<PrimeSupport>& ps) {
  std::vector<std::uint32_t> out;
  for (const auto& p : ps) out.push_back(p.vars);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("edge ideals of small graphs") {
  CHECK(edge_ideal(path_graph(3)) == ideal_of(3, {{1, 1, 0}, {0, 1, 1}}));
  CHECK(edge_ideal(empty_graph(3)).is_zero());
  CHECK(edge_ideal(complete_graph(3)) == veronese(3, 2));
}

TEST_CASE("complementary edge ideals") {
  CHECK(comp_edge_ideal(path_graph(3)) == ideal_of(3, {{1, 0, 0}, {0, 0, 1}}));
  const Graph two_k2(4, {{1, 2}, {3, 4}});
  CHECK(comp_edge_ideal(two_k2) == ideal_of(4, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
  CHECK(to_string(comp_edge_ideal(path_graph(4))) == "(x3x4, x1x4, x1x2)");
  CHECK(comp_edge_ideal(complete_graph(3)) == veronese(3, 1));
  CHECK(comp_edge_ideal(complete_graph(2)).is_unit());
  oracle::Gen gen(21);
  for (int t = 0; t < 100; ++t) {
    const Graph g = gen.graph(gen.uniform(2, 8), 0.5);
    const auto ic = comp_edge_ideal(g);
    CHECK(ic == complementary_ideal(edge_ideal(g)));
    if (g.size() > 0) CHECK((ic.is_equigenerated() && ic.min_degree() == g.order() - 2));
  }
}

TEST_CASE("complementary cover ideal: dual, intersection and closed form agree") {
  CHECK(comp_cover_ideal(complete_graph(3)) == ideal_of(3, {{1, 1, 1}}));
  CHECK(comp_cover_ideal(path_graph(3)) == ideal_of(3, {{1, 0, 1}}));
  CHECK(comp_cover_ideal(cycle_graph(4)) == ideal_of(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
  for (int n = 3; n <= 6; ++n) {
    GraphEnumeration(n, true).for_each([&](const Graph& g) {
      const auto jc = comp_cover_ideal(g);
      CHECK(jc == alexander_dual(comp_edge_ideal(g)));
      CHECK(jc == comp_cover_ideal_by_intersection(g));
      CHECK(jc == sum(edge_ideal(complement(g)), clique_ideal(g, 3)));
    });
  }
  CHECK_THROWS_AS(comp_cover_ideal(empty_graph(3)), InvalidInput);
}

TEST_CASE("clique ideals") {
  CHECK(clique_ideal(complete_graph(4), 3) == veronese(4, 3));
  CHECK(clique_ideal(cycle_graph(4), 3).is_zero());
  CHECK(clique_ideal(kPaw, 3) == ideal_of(4, {{1, 1, 1, 0}}));
  oracle::Gen gen(22);
  for (int t = 0; t < 100; ++t) {
    const Graph g = gen.graph(gen.uniform(2, 8), 0.5);
    CHECK(clique_ideal(g, 2) == edge_ideal(g));
  }
}

TEST_CASE("squarefree Veronese ideals") {
  CHECK(veronese(4, 2).size() == 6);
  CHECK(veronese(3, 1) == ideal_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= n; ++d) CHECK(veronese(n, d) == complementary_ideal(veronese(n, n - d)));
}

TEST_CASE("primary decomposition closed form matches the brute-force minimal primes") {
  CHECK(prime_masks(primary_decomposition_ic(path_graph(3)).components()) == std::vector<std::uint32_t>{0b101});
  CHECK(prime_masks(primary_decomposition_ic(complete_graph(3)).components()) == std::vector<std::uint32_t>{0b111});
  CHECK(prime_masks(primary_decomposition_ic(kPaw).components()) ==
        std::vector<std::uint32_t>{0b0111, 0b1001, 0b1010});
  CHECK(primary_decomposition_ic(complete_graph(2)).components().empty());
  for (int n = 3; n <= 6; ++n) {
    GraphEnumeration(n, false).for_each([&](const Graph& g) {
      if (g.size() == 0) return;
      const auto ic = comp_edge_ideal(g);
      if (ic.is_unit()) return;
      CHECK(prime_masks(primary_decomposition_ic(g).components()) == oracle::minimal_primes(ic));
    });
  }
}

TEST_CASE("a wrong component list is rejected") {
  const auto ic = comp_edge_ideal(path_graph(3));
  CHECK_THROWS(PrimaryDecomposition({PrimeSupport{3, 0b001}}, ic));
  CHECK_THROWS(PrimaryDecomposition({PrimeSupport{3, 0b101}, PrimeSupport{3, 0b111}}, ic));
  CHECK_NOTHROW(PrimaryDecomposition({PrimeSupport{3, 0b101}}, ic));
}

TEST_CASE("Krull dimension of S/I_c(G)") {
  CHECK(dim_ic(complete_graph(4)) == 1);
  CHECK(dim_ic(path_graph(4)) == 2);
  CHECK(dim_ic(cycle_graph(5)) == 3);
  GraphEnumeration(5, true).for_each([&](const Graph& g) {
    const auto ic = comp_edge_ideal(g);
    if (ic.is_unit()) return;
    int min_height = 99;
    for (auto p : oracle::minimal_primes(ic)) min_height = std::min(min_height, std::popcount(p));
    CHECK(dim_ic(g) == g.order() - min_height);
  });
}
