#include "cei/monomial.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "cei/error.hpp"

namespace cei {

namespace {

void require_same_ambient(int a, int b) {
  if (a != b) {
    throw InvalidInput("ambient mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

void require_squarefree(const MonomialIdeal& a, const char* what) {
  if (!a.is_squarefree()) throw InvalidInput(std::string(what) + " requires a squarefree ideal");
}

void require_proper_nonzero(const MonomialIdeal& a, const char* what) {
  if (a.is_zero() || a.is_unit()) {
    throw InvalidInput(std::string(what) + " requires a nonzero proper ideal");
  }
}

VarMask full_mask(int n) { return n >= 32 ? ~VarMask{0} : (VarMask{1} << n) - 1; }

}  // namespace

Monomial::Monomial(int ambient) {
  if (ambient < 0 || ambient > kMaxVars) {
    throw InvalidInput("ambient variable count must lie in 0.." + std::to_string(kMaxVars));
  }
  ambient_ = static_cast<std::uint8_t>(ambient);
}

Monomial::Monomial(int ambient, std::span<const int> exponents) : Monomial(ambient) {
  if (static_cast<int>(exponents.size()) != ambient) {
    throw InvalidInput("exponent vector length differs from ambient count");
  }
  for (int i = 0; i < ambient; ++i) set(i, exponents[static_cast<std::size_t>(i)]);
}

Monomial::Monomial(int ambient, std::initializer_list<int> exponents)
    : Monomial(ambient, std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial Monomial::from_support(int ambient, VarMask f) {
  Monomial m(ambient);
  if ((f & ~full_mask(ambient)) != 0) throw InvalidInput("support outside the ambient variables");
  for (VarMask r = f; r != 0; r &= r - 1) m.exps_[static_cast<std::size_t>(std::countr_zero(r))] = 1;
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= ambient_) throw InvalidInput("variable index out of range");
  if (e < 0 || e > 0xFFFF) throw InvalidInput("exponent out of range 0..65535");
  exps_[static_cast<std::size_t>(i)] = static_cast<Exponent>(e);
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < ambient_; ++i) d += exps_[static_cast<std::size_t>(i)];
  return d;
}

VarMask Monomial::support() const {
  VarMask m = 0;
  for (int i = 0; i < ambient_; ++i) {
    if (exps_[static_cast<std::size_t>(i)] != 0) m |= VarMask{1} << i;
  }
  return m;
}

bool Monomial::is_squarefree() const {
  for (int i = 0; i < ambient_; ++i) {
    if (exps_[static_cast<std::size_t>(i)] > 1) return false;
  }
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < ambient_; ++i) {
    if (exps_[static_cast<std::size_t>(i)] > other.exps_[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  for (int i = 0; i < a.ambient(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.ambient(), b.ambient());
  Monomial m(a.ambient());
  for (int i = 0; i < a.ambient(); ++i) m.set(i, std::max(a[i], b[i]));
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.ambient(), b.ambient());
  Monomial m(a.ambient());
  for (int i = 0; i < a.ambient(); ++i) m.set(i, std::min(a[i], b[i]));
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.ambient(), b.ambient());
  Monomial m(a.ambient());
  for (int i = 0; i < a.ambient(); ++i) {
    int e = int{a[i]} + int{b[i]};
    if (e > 0xFFFF) throw InvalidInput("exponent overflow in monomial product");
    m.set(i, e);
  }
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  require_same_ambient(a.ambient(), b.ambient());
  if (!b.divides(a)) throw InvalidInput("monomial division is not exact");
  Monomial m(a.ambient());
  for (int i = 0; i < a.ambient(); ++i) m.set(i, a[i] - b[i]);
  return m;
}

Monomial colon(const Monomial& u, const Monomial& v) { return u / gcd(u, v); }

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < m.ambient(); ++i) {
    if (m[i] == 0) continue;
    s += "x" + std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(m.ambient());
  for (int i = 0; i < m.ambient(); ++i) {
    h ^= m[i];
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

MonomialIdeal MonomialIdeal::unit(int ambient) {
  return minimalize(ambient, {Monomial(ambient)});
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::is_equigenerated() const {
  return gens_.empty() || min_degree() == max_degree();
}

int MonomialIdeal::min_degree() const { return gens_.empty() ? 0 : gens_.front().degree(); }

int MonomialIdeal::max_degree() const { return gens_.empty() ? 0 : gens_.back().degree(); }

VarMask MonomialIdeal::support() const {
  VarMask m = 0;
  for (const auto& g : gens_) m |= g.support();
  return m;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_ambient(ambient_, m.ambient());
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

std::string to_string(const MonomialIdeal& a) {
  if (a.is_zero()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < a.gens().size(); ++i) {
    if (i > 0) s += ", ";
    s += to_string(a.gens()[i]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& a) { return os << to_string(a); }

MonomialIdeal minimalize(int ambient, std::vector<Monomial> raw) {
  MonomialIdeal out(ambient);
  for (const auto& m : raw) require_same_ambient(ambient, m.ambient());
  std::sort(raw.begin(), raw.end(), canonical_less);
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  // Sorted by degree: a divisor of m other than m itself has smaller degree
  // and has already been kept or discarded (in which case one of its own
  // divisors was kept).
  for (const auto& m : raw) {
    const int d = m.degree();
    bool redundant = false;
    for (const auto& g : out.gens_) {
      if (g.degree() >= d) break;
      if (g.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.gens_.push_back(m);
  }
  return out;
}

MonomialIdeal ideal_of(int ambient, std::initializer_list<std::initializer_list<int>> exps) {
  std::vector<Monomial> raw;
  for (const auto& e : exps) raw.emplace_back(ambient, e);
  return minimalize(ambient, std::move(raw));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient());
  std::vector<Monomial> raw = a.gens();
  raw.insert(raw.end(), b.gens().begin(), b.gens().end());
  return minimalize(a.ambient(), std::move(raw));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient());
  std::vector<Monomial> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) raw.push_back(u * v);
  }
  return minimalize(a.ambient(), std::move(raw));
}

MonomialIdeal product(const Monomial& m, const MonomialIdeal& a) {
  require_same_ambient(m.ambient(), a.ambient());
  std::vector<Monomial> raw;
  raw.reserve(a.size());
  for (const auto& u : a.gens()) raw.push_back(m * u);
  return minimalize(a.ambient(), std::move(raw));
}

MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 0) throw InvalidInput("power exponent must be nonnegative");
  MonomialIdeal result = MonomialIdeal::unit(a.ambient());
  MonomialIdeal base = a;
  while (k > 0) {
    if (k & 1) result = product(result, base);
    k >>= 1;
    if (k > 0) base = product(base, base);
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ambient(a.ambient(), b.ambient());
  std::vector<Monomial> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) raw.push_back(lcm(u, v));
  }
  return minimalize(a.ambient(), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& m) {
  require_same_ambient(a.ambient(), m.ambient());
  std::vector<Monomial> raw;
  raw.reserve(a.size());
  for (const auto& u : a.gens()) raw.push_back(colon(u, m));
  return minimalize(a.ambient(), std::move(raw));
}

MonomialIdeal complementary_ideal(const MonomialIdeal& a) {
  require_squarefree(a, "complementary ideal");
  const VarMask all = full_mask(a.ambient());
  std::vector<Monomial> raw;
  raw.reserve(a.size());
  for (const auto& u : a.gens()) raw.push_back(Monomial::from_support(a.ambient(), all & ~u.support()));
  return minimalize(a.ambient(), std::move(raw));
}

int PrimeSupport::height() const { return std::popcount(vars); }

MonomialIdeal PrimeSupport::ideal() const {
  std::vector<Monomial> raw;
  for (VarMask r = vars; r != 0; r &= r - 1) {
    raw.push_back(Monomial::from_support(ambient, r & (~r + 1)));
  }
  return minimalize(ambient, std::move(raw));
}

bool operator<(const PrimeSupport& a, const PrimeSupport& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  // Lexicographic on the sorted variable lists: compare lowest differing bit.
  VarMask diff = a.vars ^ b.vars;
  if (diff == 0) return false;
  VarMask low = diff & (~diff + 1);
  return (a.vars & low) != 0;
}

std::string to_string(const PrimeSupport& p) {
  std::string s = "P{";
  bool first = true;
  for (VarMask r = p.vars; r != 0; r &= r - 1) {
    s += (first ? "" : ",") + std::to_string(std::countr_zero(r) + 1);
    first = false;
  }
  return s + "}";
}

namespace {

void transversals(const std::vector<VarMask>& edges, std::size_t start, VarMask chosen,
                  std::vector<VarMask>& found) {
  for (VarMask f : found) {
    if ((f & ~chosen) == 0) return;  // already contains a known transversal
  }
  std::size_t i = start;
  while (i < edges.size() && (edges[i] & chosen) != 0) ++i;
  if (i == edges.size()) {
    // Drop previously found supersets of this set.
    std::erase_if(found, [&](VarMask f) { return (chosen & ~f) == 0; });
    found.push_back(chosen);
    return;
  }
  for (VarMask r = edges[i]; r != 0; r &= r - 1) {
    transversals(edges, i + 1, chosen | (r & (~r + 1)), found);
  }
}

}  // namespace

std::vector<PrimeSupport> squarefree_minimal_primes(const MonomialIdeal& a) {
  require_squarefree(a, "minimal prime enumeration");
  require_proper_nonzero(a, "minimal prime enumeration");
  std::vector<VarMask> edges;
  for (const auto& g : a.gens()) edges.push_back(g.support());
  std::sort(edges.begin(), edges.end(),
            [](VarMask x, VarMask y) { return std::popcount(x) < std::popcount(y); });
  std::vector<VarMask> found;
  transversals(edges, 0, 0, found);
  // A set can be reached before one of its subsets; keep minimal ones only.
  std::vector<PrimeSupport> out;
  for (VarMask f : found) {
    bool minimal = std::none_of(found.begin(), found.end(),
                                [&](VarMask g) { return g != f && (g & ~f) == 0; });
    if (minimal) out.push_back({a.ambient(), f});
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal intersect_primes(int ambient, std::span<const PrimeSupport> primes) {
  MonomialIdeal result = MonomialIdeal::unit(ambient);
  for (const auto& p : primes) result = intersect(result, p.ideal());
  return result;
}

MonomialIdeal alexander_dual(const MonomialIdeal& a) {
  std::vector<Monomial> raw;
  for (const auto& p : squarefree_minimal_primes(a)) {
    raw.push_back(Monomial::from_support(a.ambient(), p.vars));
  }
  return minimalize(a.ambient(), std::move(raw));
}

MonomialIdeal symbolic_power(const MonomialIdeal& a, int k) {
  if (k < 1) throw InvalidInput("symbolic power exponent must be positive");
  const auto primes = squarefree_minimal_primes(a);
  const int n = a.ambient();
  const VarMask supp = a.support();
  std::vector<int> vars;
  for (VarMask r = supp; r != 0; r &= r - 1) vars.push_back(std::countr_zero(r));

  // Minimal generators have exponents <= k: x^b is in the intersection iff
  // every prime's variable-sum of b reaches k, and capping at k preserves that.
  double box = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) box *= (k + 1);
  if (box > double(1 << 22)) {
    MonomialIdeal result = MonomialIdeal::unit(n);
    for (const auto& p : primes) result = intersect(result, power(p.ideal(), k));
    return result;
  }

  auto member = [&](const std::vector<int>& e) {
    for (const auto& p : primes) {
      int s = 0;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (p.vars & (VarMask{1} << vars[i])) s += e[i];
      }
      if (s < k) return false;
    }
    return true;
  };

  std::vector<Monomial> raw;
  std::vector<int> e(vars.size(), 0);
  while (true) {
    if (member(e)) {
      bool minimal = true;
      for (std::size_t i = 0; i < e.size() && minimal; ++i) {
        if (e[i] == 0) continue;
        --e[i];
        minimal = !member(e);
        ++e[i];
      }
      if (minimal) {
        Monomial m(n);
        for (std::size_t i = 0; i < vars.size(); ++i) m.set(vars[i], e[i]);
        raw.push_back(m);
      }
    }
    std::size_t pos = 0;
    while (pos < e.size() && e[pos] == k) e[pos++] = 0;
    if (pos == e.size()) break;
    ++e[pos];
  }
  return minimalize(n, std::move(raw));
}

MonomialIdeal boundary(const MonomialIdeal& a) {
  std::vector<Monomial> raw;
  for (const auto& u : a.gens()) {
    if (u.is_one()) raw.push_back(u);
    for (VarMask r = u.support(); r != 0; r &= r - 1) {
      Monomial v = u;
      int i = std::countr_zero(r);
      v.set(i, u[i] - 1);
      raw.push_back(v);
    }
  }
  return minimalize(a.ambient(), std::move(raw));
}

Polarization polarize(const MonomialIdeal& a) {
  const int n = a.ambient();
  std::vector<int> width(static_cast<std::size_t>(n), 1);
  for (const auto& g : a.gens()) {
    for (int i = 0; i < n; ++i) width[static_cast<std::size_t>(i)] = std::max<int>(width[static_cast<std::size_t>(i)], g[i]);
  }
  Polarization out;
  int next = 0;
  for (int i = 0; i < n; ++i) {
    out.blocks.emplace_back(next, width[static_cast<std::size_t>(i)]);
    next += width[static_cast<std::size_t>(i)];
  }
  if (next > Monomial::kMaxVars) {
    throw ResourceGuard("polarization", "polarization needs " + std::to_string(next) +
                                            " variables (limit " +
                                            std::to_string(Monomial::kMaxVars) + ")");
  }
  std::vector<Monomial> raw;
  for (const auto& g : a.gens()) {
    Monomial m(next);
    for (int i = 0; i < n; ++i) {
      for (int s = 0; s < g[i]; ++s) m.set(out.blocks[static_cast<std::size_t>(i)].first + s, 1);
    }
    raw.push_back(m);
  }
  out.ideal = minimalize(next, std::move(raw));
  return out;
}

}  // namespace cei
