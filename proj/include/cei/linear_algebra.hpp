#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cei {

// Coefficient field for homology ranks: the rationals or Z/p, p < 2^31.
class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  static FieldSpec prime(std::uint32_t p);
  // "Q" or "Zp:<p>".
  static FieldSpec parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

// Rank over the given field. The rational rank uses fraction-free
// (Bareiss) elimination in 64-bit integers and restarts with arbitrary
// precision on overflow.
std::size_t rank(const IntMatrix& m, const FieldSpec& field);

std::size_t rank_rational(const IntMatrix& m);
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);
std::size_t rank_gf2(const IntMatrix& m);

}  // namespace cei
