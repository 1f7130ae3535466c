#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cei {

using VarMask = std::uint32_t;

// A monomial x^a in K[x_1..x_n]. Index i (0-based) holds the exponent of
// x_{i+1}. Exponents beyond the ambient count are kept at zero so the
// defaulted comparisons are value comparisons.
class Monomial {
 public:
  using Exponent = std::uint16_t;
  static constexpr int kMaxVars = 32;

  Monomial() = default;
  explicit Monomial(int ambient);
  Monomial(int ambient, std::span<const int> exponents);
  Monomial(int ambient, std::initializer_list<int> exponents);

  // x_F for a set F of variables given as a bitmask (bit i <-> x_{i+1}).
  static Monomial from_support(int ambient, VarMask f);

  int ambient() const { return ambient_; }
  Exponent operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  void set(int i, int e);

  int degree() const;
  VarMask support() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;

  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::uint8_t ambient_ = 0;
  std::array<Exponent, kMaxVars> exps_{};
};

// Canonical order: total degree, then lexicographic on exponent vectors.
bool canonical_less(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);  // overflow-checked
// a / b; b must divide a.
Monomial operator/(const Monomial& a, const Monomial& b);
// u : v = u / gcd(u, v).
Monomial colon(const Monomial& u, const Monomial& v);

// Renders x1x3^2 style; the unit monomial renders as "1".
std::string to_string(const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// A monomial ideal stored by its unique minimal generating set in
// canonical order. Zero ideal: no generators. Unit ideal: generators {1}.
//
// Zero/unit behaviour of the operations below:
//   sum(0, a) = a             sum(1, a) = 1
//   product(0, a) = 0         product(1, a) = a
//   power(a, 0) = 1           power(0, k) = 0 for k >= 1
//   intersect(0, a) = 0       intersect(1, a) = a
//   colon(a, m): 1 once m is in a; 0 : m = 0
//   complementary_ideal(0) = 0, complementary_ideal(1) = (x_[n])
//   boundary(0) = 0, boundary(1) = 1
//   minimal primes / Alexander dual / symbolic powers reject 0 and 1.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(int ambient) : ambient_(ambient) {}

  static MonomialIdeal zero(int ambient) { return MonomialIdeal(ambient); }
  static MonomialIdeal unit(int ambient);

  int ambient() const { return ambient_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;
  bool is_equigenerated() const;
  int min_degree() const;
  int max_degree() const;
  VarMask support() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(int ambient, std::vector<Monomial> raw);

  int ambient_ = 0;
  std::vector<Monomial> gens_;
};

std::string to_string(const MonomialIdeal& a);
std::ostream& operator<<(std::ostream& os, const MonomialIdeal& a);

// Drops redundant generators, deduplicates and sorts canonically.
MonomialIdeal minimalize(int ambient, std::vector<Monomial> raw);
MonomialIdeal ideal_of(int ambient, std::initializer_list<std::initializer_list<int>> exps);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const Monomial& m, const MonomialIdeal& a);
MonomialIdeal power(const MonomialIdeal& a, int k);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m);

// (x_[n]/u : u in G(a)) for squarefree a.
MonomialIdeal complementary_ideal(const MonomialIdeal& a);

// P_F = (x_i : i in F), F nonempty.
struct PrimeSupport {
  int ambient = 0;
  VarMask vars = 0;

  int height() const;
  MonomialIdeal ideal() const;
  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
};

bool operator<(const PrimeSupport& a, const PrimeSupport& b);
std::string to_string(const PrimeSupport& p);

// Inclusion-minimal variable sets meeting every generator support, sorted
// by (size, lexicographic variable list).
std::vector<PrimeSupport> squarefree_minimal_primes(const MonomialIdeal& a);

// Intersection of the given primes; the unit ideal for an empty list.
MonomialIdeal intersect_primes(int ambient, std::span<const PrimeSupport> primes);

MonomialIdeal alexander_dual(const MonomialIdeal& a);

// Intersection of P_F^k over the minimal primes of a squarefree ideal.
MonomialIdeal symbolic_power(const MonomialIdeal& a, int k);

// (u / x_i : u in G(a), i in supp(u)).
MonomialIdeal boundary(const MonomialIdeal& a);

struct Polarization {
  MonomialIdeal ideal;
  // blocks[i] = {first new variable index, count} for old variable i.
  std::vector<std::pair<int, int>> blocks;
};

// x_i^e -> x_{i,1}..x_{i,e}. Every old variable keeps at least one slot so
// squarefree input maps to itself.
Polarization polarize(const MonomialIdeal& a);

}  // namespace cei
