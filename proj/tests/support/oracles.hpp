#pragma once

// Slow, direct implementations used as ground truth in the tests. Nothing
// here calls the algorithms under test; only the value types are shared.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "cei/graph.hpp"
#include "cei/monomial.hpp"

namespace oracle {

using cei::Graph;
using cei::Monomial;
using cei::MonomialIdeal;

inline bool adjacent(const Graph& g, int i, int j) { return g.adjacent(i, j); }

// Induced subgraph on `s` (bits over vertices 1..n) is a single cycle.
inline bool induces_cycle(const Graph& g, std::uint32_t s) {
  const int k = std::popcount(s);
  if (k < 3) return false;
  std::vector<int> verts;
  for (int v = 1; v <= g.order(); ++v)
    if (s >> (v - 1) & 1) verts.push_back(v);
  for (int v : verts) {
    int d = 0;
    for (int w : verts) d += (v != w && g.adjacent(v, w)) ? 1 : 0;
    if (d != 2) return false;
  }
  // 2-regular; connected iff one cycle
  std::uint32_t seen = 1u << (verts[0] - 1), frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v : verts)
      if (frontier >> (v - 1) & 1)
        for (int w : verts)
          if (g.adjacent(v, w)) next |= 1u << (w - 1);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

inline int girth(const Graph& g) {
  int best = 0;
  for (std::uint32_t s = 1; s < (1u << g.order()); ++s)
    if (induces_cycle(g, s) && (best == 0 || std::popcount(s) < best)) best = std::popcount(s);
  return best == 0 ? cei::kInfiniteGirth : best;
}

inline bool chordal(const Graph& g) {
  for (std::uint32_t s = 1; s < (1u << g.order()); ++s)
    if (std::popcount(s) >= 4 && induces_cycle(g, s)) return false;
  return true;
}

inline int components(const Graph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [i, j] : g.edges()) parent[find(i)] = find(j);
  int c = 0;
  for (int v = 1; v <= g.order(); ++v) c += find(v) == v ? 1 : 0;
  return c;
}

inline bool forest(const Graph& g) {
  return static_cast<int>(g.size()) == g.order() - components(g);
}

// Components with at least one edge.
inline int edge_components(const Graph& g) {
  int isolated = 0;
  for (int v = 1; v <= g.order(); ++v) isolated += g.is_isolated(v) ? 1 : 0;
  return components(g) - isolated;
}

// "Not adjacent" is an equivalence relation.
inline bool complete_multipartite(const Graph& g) {
  const int n = g.order();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (!g.adjacent(a, b) && !g.adjacent(b, c) && g.adjacent(a, c)) return false;
      }
  return true;
}

inline bool member(const MonomialIdeal& a, const Monomial& m) {
  for (const auto& g : a.gens()) {
    bool div = true;
    for (int i = 0; i < m.ambient(); ++i) div = div && g[i] <= m[i];
    if (div) return true;
  }
  return false;
}

// Every exponent vector in [0, bound]^n.
template <class Fn>
void for_each_monomial(int n, int bound, Fn&& fn) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(Monomial(n, e));
    int i = 0;
    while (i < n && e[static_cast<std::size_t>(i)] == bound) e[static_cast<std::size_t>(i++)] = 0;
    if (i == n) return;
    ++e[static_cast<std::size_t>(i)];
  }
}

inline std::uint32_t support(const Monomial& m) {
  std::uint32_t s = 0;
  for (int i = 0; i < m.ambient(); ++i)
    if (m[i] > 0) s |= 1u << i;
  return s;
}

// Minimal vertex covers of the generator supports, as sorted bitmasks.
inline std::vector<std::uint32_t> minimal_primes(const MonomialIdeal& a) {
  const int n = a.ambient();
  std::vector<std::uint32_t> covers;
  for (std::uint32_t f = 0; f < (1u << n); ++f) {
    bool hits = true;
    for (const auto& g : a.gens()) hits = hits && (support(g) & f) != 0;
    if (hits) covers.push_back(f);
  }
  std::vector<std::uint32_t> out;
  for (auto f : covers) {
    bool minimal = true;
    for (auto h : covers) minimal = minimal && !(h != f && (h & ~f) == 0);
    if (minimal) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Monomial> sorted(std::vector<Monomial> v) {
  std::sort(v.begin(), v.end(), [](const Monomial& x, const Monomial& y) { return cei::canonical_less(x, y); });
  return v;
}

// Rank mod p of a small dense matrix (entries already reduced or small).
inline std::size_t rank_mod(std::vector<std::vector<long long>> m, long long p) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  auto inv = [p](long long x) {
    long long res = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) res = res * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return res;
  };
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const long long iv = inv(m[r][c]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const long long f = m[i][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Reduced homology of the complex whose faces are exactly `faces`
// (closed under subsets, includes 0 when nonempty); index d+1 holds H~_d.
inline std::vector<long long> reduced_homology(const std::vector<std::uint32_t>& faces, long long p) {
  if (faces.empty()) return {};
  int top = 0;
  for (auto f : faces) top = std::max(top, std::popcount(f));
  std::vector<std::vector<std::uint32_t>> by(static_cast<std::size_t>(top) + 1);
  for (auto f : faces) by[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& b : by) std::sort(b.begin(), b.end());
  std::vector<std::size_t> rk(static_cast<std::size_t>(top) + 2, 0);
  for (int s = 1; s <= top; ++s) {
    const auto& cols = by[static_cast<std::size_t>(s)];
    const auto& rows = by[static_cast<std::size_t>(s - 1)];
    std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int sign = 1;
      for (int v = 0; v < 32; ++v) {
        if (!(cols[c] >> v & 1)) continue;
        const auto face = cols[c] & ~(1u << v);
        const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), face) - rows.begin());
        m[r][c] = sign;
        sign = -sign;
      }
    }
    rk[static_cast<std::size_t>(s)] = rank_mod(std::move(m), p);
  }
  std::vector<long long> h(static_cast<std::size_t>(top) + 1);
  for (int s = 0; s <= top; ++s)
    h[static_cast<std::size_t>(s)] = static_cast<long long>(by[static_cast<std::size_t>(s)].size() -
                                                            rk[static_cast<std::size_t>(s)] -
                                                            rk[static_cast<std::size_t>(s) + 1]);
  return h;
}

// Graded Betti numbers of a squarefree ideal via Hochster's formula on the
// Stanley-Reisner complex: beta_{i,j}(I) = sum over |W| = j of
// dim H~_{j-i-2}(Delta_W). Key (i, j).
inline std::map<std::pair<int, int>, long long> hochster_betti(const MonomialIdeal& a, long long p) {
  const int n = a.ambient();
  std::vector<std::uint32_t> gens;
  for (const auto& g : a.gens()) gens.push_back(support(g));
  std::vector<char> is_face(std::size_t{1} << n, 0);
  for (std::uint32_t f = 0; f < (1u << n); ++f) {
    bool face = true;
    for (auto g : gens) face = face && (g & ~f) != 0;
    is_face[f] = face;
  }
  std::map<std::pair<int, int>, long long> out;
  for (std::uint32_t w = 1; w < (1u << n); ++w) {
    std::vector<std::uint32_t> faces;
    for (std::uint32_t f = w;; f = (f - 1) & w) {
      if (is_face[f]) faces.push_back(f);
      if (f == 0) break;
    }
    const auto h = reduced_homology(faces, p);
    const int j = std::popcount(w);
    for (std::size_t s = 0; s < h.size(); ++s) {
      if (h[s] == 0) continue;
      const int d = static_cast<int>(s) - 1;  // H~_d
      const int i = j - d - 2;
      out[{i, j}] += h[s];
    }
  }
  return out;
}

// Minimal generators of (u_h : h in prefix) : u, by hand.
inline std::vector<Monomial> colon_gens(const std::vector<Monomial>& prefix, const Monomial& u) {
  std::vector<Monomial> q;
  for (const auto& v : prefix) {
    std::vector<int> e(static_cast<std::size_t>(u.ambient()));
    for (int i = 0; i < u.ambient(); ++i) e[static_cast<std::size_t>(i)] = std::max(0, int(v[i]) - int(u[i]));
    q.emplace_back(u.ambient(), e);
  }
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < q.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < q.size() && keep; ++j) {
      if (i == j) continue;
      bool div = true;
      for (int t = 0; t < u.ambient(); ++t) div = div && q[j][t] <= q[i][t];
      if (div && (q[j] != q[i] || j < i)) keep = false;
    }
    if (keep) minimal.push_back(q[i]);
  }
  return minimal;
}

inline bool linear_quotients(const std::vector<Monomial>& order) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    const std::vector<Monomial> prefix(order.begin(), order.begin() + static_cast<long>(i));
    for (const auto& m : colon_gens(prefix, order[i]))
      if (m.degree() != 1) return false;
  }
  return true;
}

// Tries every permutation; for a handful of generators only.
inline bool has_linear_quotients(const MonomialIdeal& a) {
  std::vector<Monomial> g = sorted(a.gens());
  do {
    if (linear_quotients(g)) return true;
  } while (std::next_permutation(g.begin(), g.end(), [](const Monomial& x, const Monomial& y) {
    return cei::canonical_less(x, y);
  }));
  return false;
}

// Exchange axiom read off directly: for u, v and i with u_i > v_i there is
// j with u_j < v_j and x_j u / x_i in G(a).
inline bool matroidal(const MonomialIdeal& a) {
  if (a.gens().empty()) return false;
  const int d = a.gens()[0].degree();
  for (const auto& u : a.gens()) {
    if (u.degree() != d) return false;
    for (int i = 0; i < u.ambient(); ++i)
      if (u[i] > 1) return false;
  }
  auto in_gens = [&](const Monomial& m) { return std::find(a.gens().begin(), a.gens().end(), m) != a.gens().end(); };
  for (const auto& u : a.gens())
    for (const auto& v : a.gens())
      for (int i = 0; i < u.ambient(); ++i) {
        if (u[i] <= v[i]) continue;
        bool found = false;
        for (int j = 0; j < u.ambient() && !found; ++j) {
          if (u[j] >= v[j]) continue;
          Monomial w = u;
          w.set(i, u[i] - 1);
          w.set(j, w[j] + 1);
          found = in_gens(w);
        }
        if (!found) return false;
      }
  return true;
}

// Hand-rolled generators with a fixed seed per test.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  // Squarefree generators as random nonempty subsets; may be redundant.
  std::vector<Monomial> squarefree_gens(int n, int count) {
    std::vector<Monomial> out;
    for (int k = 0; k < count; ++k) {
      const auto f = static_cast<std::uint32_t>(uniform(1, (1 << n) - 1));
      out.push_back(Monomial::from_support(n, f));
    }
    return out;
  }

  std::vector<Monomial> gens(int n, int count, int max_exp) {
    std::vector<Monomial> out;
    for (int k = 0; k < count; ++k) {
      std::vector<int> e(static_cast<std::size_t>(n));
      do {
        for (auto& x : e) x = uniform(0, max_exp);
      } while (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }));
      out.emplace_back(n, e);
    }
    return out;
  }

  Graph graph(int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (coin(rng)) g.add_edge(i, j);
    return g;
  }
};

}  // namespace oracle
