#include "cei/linear_algebra.hpp"

#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>

#include "cei/error.hpp"

namespace cei {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw InvalidInput("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(Kind::Prime, p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  const std::string prefix = "Zp:";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size()) {
    const std::string digits = text.substr(prefix.size());
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10) {
      throw InvalidInput("malformed field '" + text + "'");
    }
    std::uint64_t p = std::stoull(digits);
    if (p >= (std::uint64_t{1} << 31)) throw InvalidInput("field characteristic must be below 2^31");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw InvalidInput("unknown field '" + text + "' (expected Q or Zp:<p>)");
}

std::string FieldSpec::to_string() const {
  return kind_ == Kind::Rationals ? "Q" : "Zp:" + std::to_string(p_);
}

std::size_t rank(const IntMatrix& m, const FieldSpec& field) {
  if (field.kind() == FieldSpec::Kind::Rationals) return rank_rational(m);
  if (field.characteristic() == 2) return rank_gf2(m);
  return rank_mod_p(m, field.characteristic());
}

namespace {

bool mul_sub(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t& out) {
  std::int64_t ab, cd;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd)) return false;
  return !__builtin_sub_overflow(ab, cd, &out);
}

bool mul_sub(const boost::multiprecision::cpp_int& a, const boost::multiprecision::cpp_int& b,
             const boost::multiprecision::cpp_int& c, const boost::multiprecision::cpp_int& d,
             boost::multiprecision::cpp_int& out) {
  out = a * b - c * d;
  return true;
}

// Bareiss elimination; nullopt signals overflow of the integer type.
template <class Int>
std::optional<std::size_t> bareiss_rank(std::vector<std::vector<Int>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int t;
        if (!mul_sub(a[r][c], a[i][j], a[i][c], a[r][j], t)) return std::nullopt;
        a[i][j] = t / prev;  // exact by Sylvester's identity
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank_rational(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m.at(i, j);
  }
  if (auto r = bareiss_rank(a)) return *r;
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> big(m.rows(), std::vector<cpp_int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) big[i][j] = m.at(i, j);
  }
  return *bareiss_rank(std::move(big));
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t v = m.at(i, j) % static_cast<std::int64_t>(p);
      a[i][j] = static_cast<std::uint64_t>(v < 0 ? v + p : v);
    }
  }
  auto inverse = [p](std::uint64_t x) {
    std::uint64_t result = 1, base = x, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = inverse(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv % p;
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = a[i][c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    ++r;
  }
  return r;
}

std::size_t rank_gf2(const IntMatrix& m) {
  const std::size_t words = (m.rows() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cols(m.cols(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m.at(i, j) & 1) cols[j][i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  // Column reduction keyed on the lowest set row.
  std::vector<std::int64_t> pivot_of_row(m.rows(), -1);
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& col = cols[j];
    while (true) {
      std::size_t w = 0;
      while (w < words && col[w] == 0) ++w;
      if (w == words) break;
      const std::size_t low = w * 64 + static_cast<std::size_t>(std::countr_zero(col[w]));
      if (pivot_of_row[low] < 0) {
        pivot_of_row[low] = static_cast<std::int64_t>(j);
        ++r;
        break;
      }
      const auto& other = cols[static_cast<std::size_t>(pivot_of_row[low])];
      for (std::size_t k = w; k < words; ++k) col[k] ^= other[k];
    }
  }
  return r;
}

}  // namespace cei
