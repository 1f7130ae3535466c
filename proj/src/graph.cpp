#include "cei/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <ostream>

#include "cei/error.hpp"

namespace cei {

namespace {

VertexMask bit(int v) { return VertexMask{1} << (v - 1); }

int lowest_vertex(VertexMask m) { return std::countr_zero(m) + 1; }

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidInput("graph order must lie in 0.." + std::to_string(kMaxVertices));
  }
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [i, j] : edges) add_edge(i, j);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
  for (auto [i, j] : edges) add_edge(i, j);
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) {
    throw InvalidInput("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw InvalidInput("loops are not allowed");
  if (adjacent(i, j)) {
    throw InvalidInput("duplicate edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
  }
  adj_[i - 1] |= bit(j);
  adj_[j - 1] |= bit(i);
}

bool Graph::adjacent(int i, int j) const { return (adj_[i - 1] & bit(j)) != 0; }

int Graph::degree(int v) const { return std::popcount(adj_[v - 1]); }

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (VertexMask row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](VertexMask r) { return r == 0; });
}

VertexMask Graph::all_vertices() const {
  return n_ == 32 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::uint64_t Graph::edge_bitmask() const {
  if (n_ * (n_ - 1) / 2 > 64) throw InvalidInput("edge bitmask needs n(n-1)/2 <= 64");
  std::uint64_t mask = 0;
  int index = 0;
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j, ++index) {
      if (adjacent(i, j)) mask |= std::uint64_t{1} << index;
    }
  }
  return mask;
}

Graph Graph::from_edge_bitmask(int n, std::uint64_t mask) {
  if (n * (n - 1) / 2 > 64) throw InvalidInput("edge bitmask needs n(n-1)/2 <= 64");
  Graph g(n);
  int index = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++index) {
      if ((mask >> index) & 1U) {
        g.adj_[i - 1] |= bit(j);
        g.adj_[j - 1] |= bit(i);
      }
    }
  }
  return g;
}

std::ostream& operator<<(std::ostream& os, const Graph& g) {
  os << "G(n=" << g.order() << "; ";
  bool first = true;
  for (auto [i, j] : g.edges()) {
    os << (first ? "" : " ") << i << "-" << j;
    first = false;
  }
  return os << ")";
}

bool VertexOrder::is_permutation_of(int n) const {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : order) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int i = 1; i <= g.order(); ++i) {
    for (int j = i + 1; j <= g.order(); ++j) {
      if (!g.adjacent(i, j)) c.add_edge(i, j);
    }
  }
  return c;
}

std::vector<VertexMask> connected_components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask unseen = g.all_vertices();
  while (unseen != 0) {
    VertexMask comp = bit(lowest_vertex(unseen));
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) next |= g.neighbors(lowest_vertex(f));
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

int non_isolated_component_count(const Graph& g) {
  int c = 0;
  for (VertexMask comp : connected_components(g)) c += std::popcount(comp) >= 2 ? 1 : 0;
  return c;
}

bool is_perfect_elimination_order(const Graph& g, const VertexOrder& order) {
  if (!order.is_permutation_of(g.order())) return false;
  VertexMask later = 0;
  // Walk backwards so `later` holds {v_{i+1},..,v_n} when v_i is examined.
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
    VertexMask nb = g.neighbors(*it) & later;
    for (VertexMask m = nb; m != 0; m &= m - 1) {
      int u = lowest_vertex(m);
      if ((nb & ~bit(u) & ~g.neighbors(u)) != 0) return false;
    }
    later |= bit(*it);
  }
  return true;
}

std::optional<VertexOrder> perfect_elimination_order(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n) + 1);
  std::vector<bool> numbered(static_cast<std::size_t>(n) + 1, false);
  std::vector<int> visit;
  visit.reserve(static_cast<std::size_t>(n));
  for (int step = n; step >= 1; --step) {
    int best = 0;
    for (int v = 1; v <= n; ++v) {
      if (numbered[v]) continue;
      if (best == 0 || label[v] > label[best]) best = v;
    }
    numbered[best] = true;
    visit.push_back(best);
    for (VertexMask m = g.neighbors(best); m != 0; m &= m - 1) {
      int u = lowest_vertex(m);
      if (!numbered[u]) label[u].push_back(step);
    }
  }
  VertexOrder peo{std::vector<int>(visit.rbegin(), visit.rend())};
  if (!is_perfect_elimination_order(g, peo)) return std::nullopt;
  return peo;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

bool is_forest(const Graph& g) {
  auto comps = connected_components(g);
  return g.size() + comps.size() == static_cast<std::size_t>(g.order());
}

bool is_complete(const Graph& g) {
  std::size_t n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

namespace {

void extend_cliques(const Graph& g, int t, int next, VertexMask chosen, VertexMask candidates,
                    std::vector<VertexMask>& out) {
  if (std::popcount(chosen) == t) {
    out.push_back(chosen);
    return;
  }
  for (int v = next; v <= g.order(); ++v) {
    if ((candidates & bit(v)) == 0) continue;
    extend_cliques(g, t, v + 1, chosen | bit(v), candidates & g.neighbors(v), out);
  }
}

}  // namespace

std::vector<VertexMask> cliques(const Graph& g, int t) {
  if (t < 1) throw InvalidInput("clique size must be positive");
  std::vector<VertexMask> out;
  extend_cliques(g, t, 1, 0, g.all_vertices(), out);
  return out;
}

int girth(const Graph& g) {
  const int n = g.order();
  int best = kInfiniteGirth;
  std::vector<int> dist(static_cast<std::size_t>(n) + 1);
  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (VertexMask m = g.neighbors(u); m != 0; m &= m - 1) {
        int w = lowest_vertex(m);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

bool is_complete_multipartite(const Graph& g, MultipartiteWitness* witness) {
  Graph c = complement(g);
  for (int v = 1; v <= c.order(); ++v) {
    VertexMask nb = c.neighbors(v);
    for (VertexMask m = nb; m != 0; m &= m - 1) {
      int u = lowest_vertex(m);
      // u - v - w with u, w non-adjacent is an induced P_3.
      if ((nb & ~bit(u) & ~c.neighbors(u)) != 0) return false;
    }
  }
  if (witness != nullptr) witness->parts = connected_components(c);
  return true;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexMask a) {
  a &= g.all_vertices();
  if (a == 0) throw InvalidInput("induced subgraph needs a nonempty vertex set");
  InducedSubgraph out{Graph(std::popcount(a)), {}};
  for (VertexMask m = a; m != 0; m &= m - 1) out.vertex_map.push_back(lowest_vertex(m));
  const int k = static_cast<int>(out.vertex_map.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.adjacent(out.vertex_map[i], out.vertex_map[j])) out.graph.add_edge(i + 1, j + 1);
    }
  }
  return out;
}

GraphEnumeration::GraphEnumeration(int n, bool require_no_isolated)
    : n_(n), pairs_(n * (n - 1) / 2), require_no_isolated_(require_no_isolated) {
  if (n < 1 || n > kMaxOrder) {
    throw InvalidInput("graph enumeration supports 1 <= n <= " + std::to_string(kMaxOrder));
  }
}

std::vector<Graph> GraphEnumeration::collect() const {
  std::vector<Graph> out;
  for_each([&](const Graph& g) { out.push_back(g); });
  return out;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(1, n);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_multipartite_graph(std::span<const int> part_sizes) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw InvalidInput("multipartite parts must be nonempty");
    n += part_sizes[p];
    part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
  }
  Graph g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (part_of[i - 1] != part_of[j - 1]) g.add_edge(i, j);
    }
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [i, j] : a.edges()) g.add_edge(i, j);
  for (auto [i, j] : b.edges()) g.add_edge(i + a.order(), j + a.order());
  return g;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  const int n = a.order();
  std::vector<int> da, db;
  for (int v = 1; v <= n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  const auto edges = a.edges();
  do {
    bool ok = std::all_of(edges.begin(), edges.end(), [&](const auto& e) {
      return b.adjacent(perm[e.first - 1], perm[e.second - 1]);
    });
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace cei
