#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cei/linear_algebra.hpp"
#include "cei/monomial.hpp"

namespace cei {

// Size limits for the homology computations.
struct ResourceLimits {
  std::uint64_t max_lattice = std::uint64_t{1} << 20;   // lcm lattice elements
  std::uint64_t max_matrix_entries = 4'000'000;         // per boundary matrix
  std::uint64_t max_work = std::uint64_t{1} << 32;      // estimated operations per table
};

// Graded Betti numbers beta_{i,j} of an ideal I (not of S/I):
// beta_{i,j}(S/I) = beta_{i-1,j}(I) for i >= 1.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(int ambient) : ambient_(ambient) {}

  int ambient() const { return ambient_; }
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

  std::uint64_t at(int i, int j) const;
  void add(int i, int j, std::uint64_t count);

  std::uint64_t total(int i) const;
  int regularity() const;  // max j - i
  int proj_dim() const;    // max i with a nonzero entry
  // depth S/I = n - pd(S/I) = n - (pd(I) + 1).
  int depth_quotient() const { return ambient_ - proj_dim() - 1; }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int ambient_ = 0;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

// Multigraded Betti numbers: multidegree -> (homological index -> count).
using MultigradedBetti = std::map<std::vector<int>, std::map<int, std::uint64_t>>;

// beta_{i,a}(I) = dim H~_{i-1}(K^a(I)), where the upper Koszul complex
// K^a(I) consists of the squarefree F with x^a / x_F in I. Only multidegrees
// in the lcm lattice of G(I) can contribute. Works for any monomial ideal.
MultigradedBetti multigraded_betti(const MonomialIdeal& a, const FieldSpec& field,
                                   const ResourceLimits& limits = {});

BettiTable betti_table(const MonomialIdeal& a, const FieldSpec& field,
                       const ResourceLimits& limits = {});

// Polarize, compute, then read the table back in the original ring.
BettiTable betti_table_general(const MonomialIdeal& a, const FieldSpec& field,
                               const ResourceLimits& limits = {});

int regularity(const MonomialIdeal& a, const FieldSpec& field);
int proj_dim(const MonomialIdeal& a, const FieldSpec& field);
int depth_quotient(const MonomialIdeal& a, const FieldSpec& field);

// Reduced homology dimensions H~_{-1}, H~_0, ... of the simplicial complex
// generated by the given facets (bitmasks over vertices 0..31). An empty
// facet list is the void complex (no homology); a single empty facet is
// {emptyset}, which has H~_{-1} of dimension 1. Entries past the end of
// the result are zero; an acyclic complex may come back empty.
std::vector<std::uint64_t> reduced_homology(const std::vector<std::uint32_t>& facets,
                                            const FieldSpec& field,
                                            const ResourceLimits& limits = {});

// Equigenerated in degree d and reg = d.
bool has_linear_resolution(const MonomialIdeal& a, const FieldSpec& field);

// Ideal generated by the degree-j monomials of a.
MonomialIdeal component_ideal(const MonomialIdeal& a, int j);

// Checks a_<j> for j from the least generator degree up to
// max(reg a, max generator degree). Above reg a every component has a
// linear resolution, so the scan is complete.
bool is_componentwise_linear(const MonomialIdeal& a, const FieldSpec& field);

// order[i] indexes into a.gens(). True iff for every i >= 1 and j < i some
// h < i has u_h : u_i equal to a variable dividing u_j : u_i.
bool verify_linear_quotients_order(const MonomialIdeal& a, const std::vector<std::size_t>& order);

enum class SearchOutcome { Found, Absent, BudgetExhausted };

struct LinearQuotientsSearch {
  SearchOutcome outcome = SearchOutcome::Absent;
  std::vector<std::size_t> order;
  std::uint64_t nodes = 0;
};

// Depth-first search over admissible prefixes, memoizing dead prefix sets
// (admissibility of the next generator only depends on the set already
// placed). `node_budget` = 0 means unlimited.
LinearQuotientsSearch search_linear_quotients_order(const MonomialIdeal& a,
                                                    std::uint64_t node_budget = 0);

inline constexpr std::size_t kLinearQuotientsSearchLimit = 24;

// Exhaustive; rejects ideals with more than kLinearQuotientsSearchLimit
// generators (verify a supplied order instead).
std::optional<std::vector<std::size_t>> find_linear_quotients_order(const MonomialIdeal& a);

}  // namespace cei
