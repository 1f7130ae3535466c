#include "cei/graph_ideals.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "cei/error.hpp"

namespace cei {

namespace {

VarMask pair_mask(int i, int j) { return (VarMask{1} << (i - 1)) | (VarMask{1} << (j - 1)); }

}  // namespace

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> raw;
  for (auto [i, j] : g.edges()) raw.push_back(Monomial::from_support(g.order(), pair_mask(i, j)));
  return minimalize(g.order(), std::move(raw));
}

MonomialIdeal comp_edge_ideal(const Graph& g) { return complementary_ideal(edge_ideal(g)); }

MonomialIdeal comp_cover_ideal(const Graph& g) {
  if (g.order() < 3 || g.size() == 0) {
    throw InvalidInput("complementary cover ideal needs n >= 3 and at least one edge");
  }
  return alexander_dual(comp_edge_ideal(g));
}

MonomialIdeal comp_cover_ideal_by_intersection(const Graph& g) {
  if (g.order() < 3 || g.size() == 0) {
    throw InvalidInput("complementary cover ideal needs n >= 3 and at least one edge");
  }
  std::vector<PrimeSupport> primes;
  for (auto [i, j] : g.edges()) primes.push_back({g.order(), g.all_vertices() & ~pair_mask(i, j)});
  return intersect_primes(g.order(), primes);
}

MonomialIdeal clique_ideal(const Graph& g, int t) {
  std::vector<Monomial> raw;
  for (VertexMask c : cliques(g, t)) raw.push_back(Monomial::from_support(g.order(), c));
  return minimalize(g.order(), std::move(raw));
}

MonomialIdeal veronese(int n, int d) {
  if (d < 0 || d > n) throw InvalidInput("Veronese degree must lie in 0..n");
  if (n > Monomial::kMaxVars) throw InvalidInput("too many variables");
  std::vector<Monomial> raw;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t f = 0; f < limit; ++f) {
    if (std::popcount(f) == d) raw.push_back(Monomial::from_support(n, static_cast<VarMask>(f)));
  }
  return minimalize(n, std::move(raw));
}

PrimaryDecomposition::PrimaryDecomposition(std::vector<PrimeSupport> components,
                                           const MonomialIdeal& target)
    : components_(std::move(components)) {
  std::sort(components_.begin(), components_.end());
  for (const auto& p : components_) {
    for (const auto& q : components_) {
      if (!(p == q) && (p.vars & ~q.vars) == 0) {
        throw std::logic_error("decomposition has comparable components " + to_string(p) +
                               " and " + to_string(q));
      }
    }
  }
  if (!(intersect_primes(target.ambient(), components_) == target)) {
    throw std::logic_error("decomposition does not intersect to " + to_string(target));
  }
}

namespace {

std::vector<PrimeSupport> closed_form_primes(const Graph& g) {
  std::vector<PrimeSupport> primes;
  for (auto [i, j] : complement(g).edges()) primes.push_back({g.order(), pair_mask(i, j)});
  for (VertexMask t : cliques(g, 3)) primes.push_back({g.order(), t});
  return primes;
}

}  // namespace

PrimaryDecomposition primary_decomposition_ic(const Graph& g) {
  if (g.size() == 0) throw InvalidInput("edgeless graph: I_c(G) = 0 has no decomposition");
  const MonomialIdeal target = comp_edge_ideal(g);
  if (!g.has_isolated_vertex()) return PrimaryDecomposition(closed_form_primes(g), target);

  VertexMask isolated = 0;
  for (int v = 1; v <= g.order(); ++v) {
    if (g.is_isolated(v)) isolated |= VertexMask{1} << (v - 1);
  }
  const InducedSubgraph h = induced_subgraph(g, g.all_vertices() & ~isolated);
  std::vector<PrimeSupport> primes;
  for (VertexMask r = isolated; r != 0; r &= r - 1) primes.push_back({g.order(), r & (~r + 1)});
  for (const auto& p : closed_form_primes(h.graph)) {
    VarMask lifted = 0;
    for (VarMask r = p.vars; r != 0; r &= r - 1) {
      lifted |= VarMask{1} << (h.vertex_map[static_cast<std::size_t>(std::countr_zero(r))] - 1);
    }
    primes.push_back({g.order(), lifted});
  }
  return PrimaryDecomposition(std::move(primes), target);
}

int dim_ic(const Graph& g) {
  if (g.has_isolated_vertex()) throw InvalidInput("dim_ic requires a graph without isolated vertices");
  return is_complete(g) ? g.order() - 3 : g.order() - 2;
}

}  // namespace cei
