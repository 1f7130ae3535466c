#include "cei/resolutions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "cei/error.hpp"

namespace cei {

std::uint64_t BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, std::uint64_t count) {
  if (count == 0) return;
  entries_[{i, j}] += count;
}

std::uint64_t BettiTable::total(int i) const {
  std::uint64_t t = 0;
  for (const auto& [key, count] : entries_) {
    if (key.first == i) t += count;
  }
  return t;
}

int BettiTable::regularity() const {
  int reg = 0;
  bool first = true;
  for (const auto& [key, count] : entries_) {
    if (first || key.second - key.first > reg) reg = key.second - key.first;
    first = false;
  }
  return reg;
}

int BettiTable::proj_dim() const {
  int pd = 0;
  for (const auto& [key, count] : entries_) pd = std::max(pd, key.first);
  return pd;
}

namespace {

// Compresses the vertices used by `facets` to 0..v-1.
std::uint32_t compress(std::uint32_t mask, std::uint32_t used) {
  std::uint32_t out = 0;
  int k = 0;
  for (std::uint32_t r = used; r != 0; r &= r - 1, ++k) {
    if (mask & (r & (~r + 1))) out |= std::uint32_t{1} << k;
  }
  return out;
}

void check_entries(std::uint64_t rows, std::uint64_t cols, const ResourceLimits& limits) {
  if (rows * cols > limits.max_matrix_entries) {
    throw ResourceGuard("boundary-matrix", "boundary matrix of " + std::to_string(rows) + "x" +
                                               std::to_string(cols) + " exceeds " +
                                               std::to_string(limits.max_matrix_entries) +
                                               " entries");
  }
}

}  // namespace

namespace {

// Buffers reused across the many small homology problems of one scan.
struct HomologyWorkspace {
  std::vector<std::uint32_t> facets;
  std::vector<std::uint32_t> maximal;
  std::vector<std::uint8_t> present;
  std::vector<std::int32_t> dense_index;
  std::vector<std::vector<std::uint32_t>> by_size;
  std::vector<std::uint64_t> ranks;
  std::vector<std::uint64_t> words;
  std::vector<std::int64_t> pivot_of_row;
};

HomologyWorkspace& workspace() {
  thread_local HomologyWorkspace ws;
  return ws;
}

// Rank over GF(2) of a boundary matrix given by face lists; columns are
// bit vectors over the row faces.
template <class IndexOf>
std::uint64_t boundary_rank_gf2(const std::vector<std::uint32_t>& cols, std::size_t rows, IndexOf index_of,
                                HomologyWorkspace& ws) {
  if (rows <= 64) {
    std::uint64_t basis[64] = {};
    std::uint64_t r = 0;
    for (std::uint32_t face : cols) {
      std::uint64_t col = 0;
      for (std::uint32_t q = face; q != 0; q &= q - 1) col |= std::uint64_t{1} << index_of(face & ~(q & (~q + 1)));
      while (col != 0) {
        const int low = std::countr_zero(col);
        if (basis[low] == 0) {
          basis[low] = col;
          ++r;
          break;
        }
        col ^= basis[low];
      }
    }
    return r;
  }
  const std::size_t words = (rows + 63) / 64;
  ws.words.assign(words * cols.size(), 0);
  ws.pivot_of_row.assign(rows, -1);
  std::uint64_t r = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::uint64_t* col = ws.words.data() + c * words;
    for (std::uint32_t q = cols[c]; q != 0; q &= q - 1) {
      const std::size_t row = index_of(cols[c] & ~(q & (~q + 1)));
      col[row / 64] |= std::uint64_t{1} << (row % 64);
    }
    while (true) {
      std::size_t w = 0;
      while (w < words && col[w] == 0) ++w;
      if (w == words) break;
      const std::size_t low = w * 64 + static_cast<std::size_t>(std::countr_zero(col[w]));
      if (ws.pivot_of_row[low] < 0) {
        ws.pivot_of_row[low] = static_cast<std::int64_t>(c);
        ++r;
        break;
      }
      const std::uint64_t* other = ws.words.data() + static_cast<std::size_t>(ws.pivot_of_row[low]) * words;
      for (std::size_t k = w; k < words; ++k) col[k] ^= other[k];
    }
  }
  return r;
}

// `work` accumulates faces enumerated plus an elimination cost estimate,
// for the caller's budget.
void homology_into(const std::vector<std::uint32_t>& raw_facets, const FieldSpec& field,
                   const ResourceLimits& limits, std::vector<std::uint64_t>& homology, std::uint64_t& work) {
  homology.clear();
  if (raw_facets.empty()) return;
  HomologyWorkspace& ws = workspace();
  // Keep maximal facets only.
  auto& facets = ws.facets;
  facets = raw_facets;
  std::sort(facets.begin(), facets.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  auto& maximal = ws.maximal;
  maximal.clear();
  for (std::uint32_t f : facets) {
    const bool contained = std::any_of(maximal.begin(), maximal.end(),
                                       [f](std::uint32_t m) { return (f & ~m) == 0; });
    if (!contained) maximal.push_back(f);
  }
  // A simplex is acyclic unless it is {emptyset}; two simplices are
  // acyclic unless disjoint.
  if (maximal.size() == 1) {
    if (maximal[0] == 0) homology.assign(1, 1);
    return;
  }
  if (maximal.size() == 2) {
    if ((maximal[0] & maximal[1]) == 0) homology = {0, 1};
    return;
  }
  std::uint32_t used = 0;
  for (std::uint32_t f : maximal) used |= f;
  for (auto& f : maximal) f = compress(f, used);
  const int v = std::popcount(used);

  // Faces grouped by cardinality; by_size[s] sorted ascending.
  auto& by_size = ws.by_size;
  if (by_size.size() < static_cast<std::size_t>(v) + 1) by_size.resize(static_cast<std::size_t>(v) + 1);
  for (int s = 0; s <= v; ++s) by_size[static_cast<std::size_t>(s)].clear();
  std::unordered_map<std::uint32_t, std::uint32_t> sparse_index;
  const bool dense = v <= 20;
  if (dense) {
    const std::size_t cells = std::size_t{1} << v;
    work += cells;
    ws.present.assign(cells, 0);
    for (std::uint32_t f : maximal) {
      std::uint32_t s = f;
      while (true) {
        ws.present[s] = 1;
        if (s == 0) break;
        s = (s - 1) & f;
      }
    }
    ws.dense_index.resize(cells);
    for (std::uint32_t s = 0; s < cells; ++s) {
      if (!ws.present[s]) continue;
      auto& bucket = by_size[static_cast<std::size_t>(std::popcount(s))];
      ws.dense_index[s] = static_cast<std::int32_t>(bucket.size());
      bucket.push_back(s);
    }
  } else {
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t f : maximal) {
      if (std::popcount(f) > 22) {
        throw ResourceGuard("complex-size", "simplicial complex facet too large to enumerate");
      }
      std::uint32_t s = f;
      while (true) {
        seen.insert(s);
        if (seen.size() > limits.max_matrix_entries) {
          throw ResourceGuard("complex-size", "simplicial complex has too many faces");
        }
        if (s == 0) break;
        s = (s - 1) & f;
      }
    }
    work += seen.size();
    for (std::uint32_t s : seen) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    for (int s = 0; s <= v; ++s) {
      auto& bucket = by_size[static_cast<std::size_t>(s)];
      std::sort(bucket.begin(), bucket.end());
      for (std::size_t i = 0; i < bucket.size(); ++i) sparse_index[bucket[i]] = static_cast<std::uint32_t>(i);
    }
  }
  auto index_of = [&](std::uint32_t s) -> std::size_t {
    return dense ? static_cast<std::size_t>(ws.dense_index[s]) : sparse_index.at(s);
  };

  int top = v;
  while (top > 0 && by_size[static_cast<std::size_t>(top)].empty()) --top;

  // ranks[s] = rank of the boundary map from size-s faces to size-(s-1) faces.
  auto& ranks = ws.ranks;
  ranks.assign(static_cast<std::size_t>(top) + 2, 0);
  const bool gf2 = field.kind() == FieldSpec::Kind::Prime && field.characteristic() == 2;
  for (int s = 1; s <= top; ++s) {
    const auto& cols = by_size[static_cast<std::size_t>(s)];
    const auto& rows = by_size[static_cast<std::size_t>(s - 1)];
    check_entries(rows.size(), cols.size(), limits);
    // Elimination cost: entries times pivots, 64 columns per word over Z/2.
    const std::uint64_t entries = static_cast<std::uint64_t>(rows.size()) * cols.size();
    const std::uint64_t pivots = std::min(rows.size(), cols.size());
    work += entries * (gf2 ? 1 + pivots / 64 : 1 + pivots);
    if (gf2) {
      ranks[static_cast<std::size_t>(s)] = boundary_rank_gf2(cols, rows.size(), index_of, ws);
      continue;
    }
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      int sign = 1;
      for (std::uint32_t r = cols[c]; r != 0; r &= r - 1, sign = -sign) {
        m.at(index_of(cols[c] & ~(r & (~r + 1))), c) = sign;
      }
    }
    ranks[static_cast<std::size_t>(s)] = rank(m, field);
  }
  homology.assign(static_cast<std::size_t>(top) + 1, 0);
  for (int s = 0; s <= top; ++s) {
    homology[static_cast<std::size_t>(s)] = by_size[static_cast<std::size_t>(s)].size() -
                                            ranks[static_cast<std::size_t>(s)] -
                                            ranks[static_cast<std::size_t>(s) + 1];
  }
}

}  // namespace

std::vector<std::uint64_t> reduced_homology(const std::vector<std::uint32_t>& facets, const FieldSpec& field,
                                            const ResourceLimits& limits) {
  std::vector<std::uint64_t> out;
  std::uint64_t work = 0;
  homology_into(facets, field, limits, out, work);
  return out;
}

namespace {

void check_work(std::uint64_t work, const ResourceLimits& limits) {
  if (work > limits.max_work) {
    throw ResourceGuard("work", "Betti computation exceeds " + std::to_string(limits.max_work) +
                                    " estimated operations");
  }
}

void require_proper(const MonomialIdeal& a) {
  if (a.is_zero() || a.is_unit()) throw InvalidInput("Betti numbers need a nonzero proper ideal");
}

// Visits every lcm-lattice multidegree with its upper Koszul facets.
// Facet of generator g at multidegree a: {i : g_i < a_i}. A multidegree
// off the lattice has some i in supp(a) with g_i < a_i for every g | x^a,
// i.e. a common vertex of all facets (a cone), so "facets intersect to
// the empty set" is exactly lattice membership.
//
// Multidegrees are built one coordinate at a time. Coordinate d only takes
// values g_d of generators still dividing the prefix, since a lattice
// element is attained coordinatewise by one of its divisors.
class KoszulScanner {
 public:
  static constexpr std::uint64_t kMaxVisited = std::uint64_t{1} << 26;

  KoszulScanner(const MonomialIdeal& a, const ResourceLimits& limits)
      : limits_(limits), n_(a.ambient()), m_(a.size()) {
    exps_.resize(m_ * static_cast<std::size_t>(n_));
    for (std::size_t g = 0; g < m_; ++g) {
      for (int i = 0; i < n_; ++i) exps_[g * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i)] = a.gens()[g][i];
    }
    degree_.assign(static_cast<std::size_t>(n_), 0);
    levels_.resize(static_cast<std::size_t>(n_) + 1);
    values_.resize(static_cast<std::size_t>(n_));
  }

  template <class Fn>
  void scan(Fn&& visit) {
    auto& root = levels_[0];
    root.resize(m_);
    for (std::size_t g = 0; g < m_; ++g) root[g] = static_cast<std::uint32_t>(g);
    descend(0, visit);
  }

 private:
  int exp(std::uint32_t g, int i) const {
    return exps_[static_cast<std::size_t>(g) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i)];
  }

  template <class Fn>
  void descend(int d, Fn& visit) {
    const auto& cands = levels_[static_cast<std::size_t>(d)];
    if (d == n_) {
      leaf(cands, visit);
      return;
    }
    if (++visited_ > kMaxVisited) {
      throw ResourceGuard("lcm-lattice", "lcm lattice search exceeds " + std::to_string(kMaxVisited) + " nodes");
    }
    auto& values = values_[static_cast<std::size_t>(d)];
    values.clear();
    for (std::uint32_t g : cands) values.push_back(exp(g, d));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    auto& next = levels_[static_cast<std::size_t>(d) + 1];
    for (int v : values) {
      next.clear();
      for (std::uint32_t g : levels_[static_cast<std::size_t>(d)]) {
        if (exp(g, d) <= v) next.push_back(g);
      }
      degree_[static_cast<std::size_t>(d)] = v;
      descend(d + 1, visit);
    }
  }

  template <class Fn>
  void leaf(const std::vector<std::uint32_t>& divisors, Fn& visit) {
    facets_.clear();
    std::uint32_t common = ~std::uint32_t{0};
    for (std::uint32_t g : divisors) {
      std::uint32_t facet = 0;
      for (int i = 0; i < n_; ++i) {
        if (exp(g, i) < degree_[static_cast<std::size_t>(i)]) facet |= std::uint32_t{1} << i;
      }
      common &= facet;
      facets_.push_back(facet);
    }
    if (facets_.empty() || common != 0) return;
    if (++lattice_ > limits_.max_lattice) {
      throw ResourceGuard("lcm-lattice", "lcm lattice exceeds " + std::to_string(limits_.max_lattice) + " elements");
    }
    visit(degree_, facets_);
  }

  const ResourceLimits& limits_;
  int n_;
  std::size_t m_;
  std::vector<std::uint16_t> exps_;
  std::vector<int> degree_;
  std::vector<std::vector<std::uint32_t>> levels_;
  std::vector<std::vector<int>> values_;
  std::vector<std::uint32_t> facets_;
  std::uint64_t visited_ = 0;
  std::uint64_t lattice_ = 0;
};

}  // namespace

MultigradedBetti multigraded_betti(const MonomialIdeal& a, const FieldSpec& field,
                                   const ResourceLimits& limits) {
  require_proper(a);
  MultigradedBetti out;
  KoszulScanner scanner(a, limits);
  std::vector<std::uint64_t> h;
  std::uint64_t work = 0;
  scanner.scan([&](const std::vector<int>& degree, const std::vector<std::uint32_t>& facets) {
    homology_into(facets, field, limits, h, work);
    check_work(work, limits);
    for (std::size_t d = 0; d < h.size(); ++d) {
      if (h[d] != 0) out[degree][static_cast<int>(d)] = h[d];
    }
  });
  return out;
}

BettiTable betti_table(const MonomialIdeal& a, const FieldSpec& field, const ResourceLimits& limits) {
  require_proper(a);
  BettiTable table(a.ambient());
  KoszulScanner scanner(a, limits);
  std::vector<std::uint64_t> h;
  std::uint64_t work = 0;
  scanner.scan([&](const std::vector<int>& degree, const std::vector<std::uint32_t>& facets) {
    int total = 0;
    for (int e : degree) total += e;
    homology_into(facets, field, limits, h, work);
    check_work(work, limits);
    // H~_{i-1} sits at index i.
    for (std::size_t i = 0; i < h.size(); ++i) table.add(static_cast<int>(i), total, h[i]);
  });
  return table;
}

BettiTable betti_table_general(const MonomialIdeal& a, const FieldSpec& field,
                               const ResourceLimits& limits) {
  require_proper(a);
  const Polarization pol = polarize(a);
  const BettiTable polarized = betti_table(pol.ideal, field, limits);
  BettiTable out(a.ambient());
  for (const auto& [key, count] : polarized.entries()) out.add(key.first, key.second, count);
  return out;
}

int regularity(const MonomialIdeal& a, const FieldSpec& field) {
  return betti_table(a, field).regularity();
}

int proj_dim(const MonomialIdeal& a, const FieldSpec& field) {
  return betti_table(a, field).proj_dim();
}

int depth_quotient(const MonomialIdeal& a, const FieldSpec& field) {
  return betti_table(a, field).depth_quotient();
}

bool has_linear_resolution(const MonomialIdeal& a, const FieldSpec& field) {
  require_proper(a);
  if (!a.is_equigenerated()) return false;
  return betti_table(a, field).regularity() == a.min_degree();
}

MonomialIdeal component_ideal(const MonomialIdeal& a, int j) {
  if (j < 0) throw InvalidInput("component degree must be nonnegative");
  const int n = a.ambient();
  std::vector<Monomial> raw;
  std::function<void(Monomial&, int, int)> extend = [&](Monomial& m, int from, int left) {
    if (left == 0) {
      raw.push_back(m);
      return;
    }
    for (int i = from; i < n; ++i) {
      m.set(i, m[i] + 1);
      extend(m, i, left - 1);
      m.set(i, m[i] - 1);
    }
  };
  for (const auto& g : a.gens()) {
    if (g.degree() > j) continue;
    Monomial m = g;
    extend(m, 0, j - g.degree());
  }
  return minimalize(n, std::move(raw));
}

bool is_componentwise_linear(const MonomialIdeal& a, const FieldSpec& field) {
  require_proper(a);
  const int reg = regularity(a, field);
  const int upper = std::max(reg, a.max_degree());
  for (int j = a.min_degree(); j <= upper; ++j) {
    if (!has_linear_resolution(component_ideal(a, j), field)) return false;
  }
  return true;
}

namespace {

// Pairwise colon data: support of u_j : u_i and, when it is a single
// variable x_p, the index p.
struct ColonTable {
  explicit ColonTable(const std::vector<Monomial>& gens) : m(gens.size()) {
    support.assign(m * m, 0);
    variable.assign(m * m, -1);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        if (i == j) continue;
        const Monomial c = colon(gens[j], gens[i]);
        support[j * m + i] = c.support();
        if (c.degree() == 1) variable[j * m + i] = std::countr_zero(c.support());
      }
    }
  }

  std::uint32_t colon_support(std::size_t j, std::size_t i) const { return support[j * m + i]; }
  int colon_variable(std::size_t j, std::size_t i) const { return variable[j * m + i]; }

  // Whether gens[i] may follow the placed generators.
  template <class Placed>
  bool admissible(const Placed& placed, std::size_t i) const {
    std::uint32_t vars = 0;
    for (std::size_t h : placed) {
      const int p = colon_variable(h, i);
      if (p >= 0) vars |= std::uint32_t{1} << p;
    }
    for (std::size_t j : placed) {
      if ((colon_support(j, i) & vars) == 0) return false;
    }
    return true;
  }

  std::size_t m;
  std::vector<std::uint32_t> support;
  std::vector<int> variable;
};

struct BitsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : v) h = (h ^ w) * 0xff51afd7ed558ccdULL;
    return static_cast<std::size_t>(h);
  }
};

class LinearQuotientsSearcher {
 public:
  LinearQuotientsSearcher(const MonomialIdeal& a, std::uint64_t budget)
      : table_(a.gens()), m_(a.size()), budget_(budget), placed_mask_((m_ + 63) / 64, 0) {}

  LinearQuotientsSearch run() {
    LinearQuotientsSearch result;
    bool exhausted = false;
    for (std::size_t first = 0; first < m_ && !exhausted; ++first) {
      place(first);
      if (extend(exhausted)) {
        result.outcome = SearchOutcome::Found;
        result.order = placed_;
        result.nodes = nodes_;
        return result;
      }
      unplace();
    }
    result.outcome = exhausted ? SearchOutcome::BudgetExhausted : SearchOutcome::Absent;
    result.nodes = nodes_;
    return result;
  }

 private:
  void place(std::size_t i) {
    placed_.push_back(i);
    placed_mask_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void unplace() {
    const std::size_t i = placed_.back();
    placed_.pop_back();
    placed_mask_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  bool is_placed(std::size_t i) const { return (placed_mask_[i / 64] >> (i % 64)) & 1U; }

  bool extend(bool& exhausted) {
    if (placed_.size() == m_) return true;
    if (dead_.count(placed_mask_) != 0) return false;
    if (budget_ != 0 && nodes_ >= budget_) {
      exhausted = true;
      return false;
    }
    ++nodes_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (is_placed(i) || !table_.admissible(placed_, i)) continue;
      place(i);
      if (extend(exhausted)) return true;
      unplace();
      if (exhausted) return false;
    }
    dead_.insert(placed_mask_);
    return false;
  }

  ColonTable table_;
  std::size_t m_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> placed_;
  std::vector<std::uint64_t> placed_mask_;
  std::unordered_set<std::vector<std::uint64_t>, BitsetHash> dead_;
};

}  // namespace

bool verify_linear_quotients_order(const MonomialIdeal& a, const std::vector<std::size_t>& order) {
  std::vector<bool> seen(a.size(), false);
  if (order.size() != a.size()) throw InvalidInput("order is not a permutation of the generators");
  for (std::size_t i : order) {
    if (i >= a.size() || seen[i]) throw InvalidInput("order is not a permutation of the generators");
    seen[i] = true;
  }
  const ColonTable table(a.gens());
  std::vector<std::size_t> prefix;
  for (std::size_t i : order) {
    if (!table.admissible(prefix, i)) return false;
    prefix.push_back(i);
  }
  return true;
}

LinearQuotientsSearch search_linear_quotients_order(const MonomialIdeal& a,
                                                    std::uint64_t node_budget) {
  if (a.is_zero()) throw InvalidInput("the zero ideal has no generators to order");
  return LinearQuotientsSearcher(a, node_budget).run();
}

std::optional<std::vector<std::size_t>> find_linear_quotients_order(const MonomialIdeal& a) {
  if (a.size() > kLinearQuotientsSearchLimit) {
    throw ResourceGuard("lq-search", "exhaustive linear-quotients search is limited to " +
                                         std::to_string(kLinearQuotientsSearchLimit) +
                                         " generators; verify a supplied order instead");
  }
  auto result = search_linear_quotients_order(a);
  if (result.outcome != SearchOutcome::Found) return std::nullopt;
  return result.order;
}

}  // namespace cei
