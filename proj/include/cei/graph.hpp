#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cei {

using VertexMask = std::uint32_t;

// Labeled finite simple graph on vertices 1..n (n <= Graph::kMaxVertices).
// Adjacency is stored as one bitmask row per vertex; bit v-1 stands for v.
class Graph {
 public:
  static constexpr int kMaxVertices = 32;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  std::size_t size() const;  // number of edges

  void add_edge(int i, int j);
  bool adjacent(int i, int j) const;
  VertexMask neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const;
  bool is_isolated(int v) const { return adj_[v - 1] == 0; }
  bool has_isolated_vertex() const;
  VertexMask all_vertices() const;

  // Edges {i,j}, i<j, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  // Edge-set bitmask over the n(n-1)/2 pairs (1,2),(1,3),..,(1,n),(2,3),..
  // in that order; requires n(n-1)/2 <= 64.
  std::uint64_t edge_bitmask() const;
  static Graph from_edge_bitmask(int n, std::uint64_t mask);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexMask> adj_;
};

std::ostream& operator<<(std::ostream& os, const Graph& g);

// A permutation v_1..v_n of the vertex set.
struct VertexOrder {
  std::vector<int> order;

  bool is_permutation_of(int n) const;
  friend bool operator==(const VertexOrder&, const VertexOrder&) = default;
};

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

Graph complement(const Graph& g);

// Connected components as vertex masks, ordered by smallest vertex.
std::vector<VertexMask> connected_components(const Graph& g);

// Number of connected components with at least two vertices.
int non_isolated_component_count(const Graph& g);

// Checks the elimination condition directly: for every i the later
// neighbours of v_i in the order form a clique.
bool is_perfect_elimination_order(const Graph& g, const VertexOrder& order);

// Lex-BFS candidate, reversed, then verified. Empty when g is not chordal.
std::optional<VertexOrder> perfect_elimination_order(const Graph& g);

bool is_chordal(const Graph& g);
bool is_forest(const Graph& g);
bool is_complete(const Graph& g);

// All t-subsets inducing K_t, lexicographic in sorted vertex tuples.
std::vector<VertexMask> cliques(const Graph& g, int t);

// Length of a shortest cycle (which is always induced); kInfiniteGirth
// for forests.
int girth(const Graph& g);

struct MultipartiteWitness {
  std::vector<VertexMask> parts;
};

// True iff the complement has no induced P_3. The witness lists the
// components of the complement (each a clique there).
bool is_complete_multipartite(const Graph& g, MultipartiteWitness* witness = nullptr);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;  // new vertex i+1 <- old vertex vertex_map[i]
};

// Relabels the vertices of A to 1..|A| preserving their order.
InducedSubgraph induced_subgraph(const Graph& g, VertexMask a);

// Every labeled graph on n vertices in ascending edge-bitmask order.
class GraphEnumeration {
 public:
  static constexpr int kMaxOrder = 8;

  GraphEnumeration(int n, bool require_no_isolated);

  int order() const { return n_; }
  std::uint64_t mask_count() const { return std::uint64_t{1} << pairs_; }

  // Calls fn(graph) for each graph in order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t mask = 0; mask < mask_count(); ++mask) {
      Graph g = Graph::from_edge_bitmask(n_, mask);
      if (require_no_isolated_ && g.has_isolated_vertex()) continue;
      fn(g);
    }
  }

  std::vector<Graph> collect() const;

 private:
  int n_;
  int pairs_;
  bool require_no_isolated_;
};

// Standard families on vertices 1..n.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph complete_multipartite_graph(std::span<const int> part_sizes);
// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Brute-force isomorphism by permutation; intended for n <= 8.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace cei
