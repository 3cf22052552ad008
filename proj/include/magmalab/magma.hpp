// magma.hpp — finite magmas as Cayley tables, plus the constructor families
// used throughout the engine.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace magmalab {

// Thrown for invalid construction arguments, malformed input text and
// exceeded enumeration bounds. The CLI maps it to exit code 2.
struct MagmaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element indices live in 0..order-1 and orders are capped at 64 so that a
// subset of the carrier always fits one machine word.
inline constexpr int kMaxOrder = 64;

// Subset of a carrier {0..n-1}, stored as a bitmask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> xs) {
    for (int x : xs) add(x);
  }

  static ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  bool contains(int x) const { return (bits_ >> x) & 1u; }
  void add(int x) { bits_ |= std::uint64_t{1} << x; }
  void remove(int x) { bits_ &= ~(std::uint64_t{1} << x); }
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  std::vector<int> members() const;
  std::string to_string() const;  // "{0, 2, 3}"

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Immutable Cayley table: at(l, r) = l * r, row = left operand. A transposed
// copy and per-column/row image masks are precomputed; column scans dominate
// every predicate in the engine.
class Magma {
 public:
  Magma(int order, std::vector<std::uint8_t> row_major_entries);

  int order() const { return order_; }
  int at(int left, int right) const { return table_[left * order_ + right]; }

  const std::vector<std::uint8_t>& table() const { return table_; }
  std::span<const std::uint8_t> row(int r) const {
    return {table_.data() + r * order_, static_cast<std::size_t>(order_)};
  }
  std::span<const std::uint8_t> column(int c) const {
    return {transposed_.data() + c * order_, static_cast<std::size_t>(order_)};
  }

  // Bitmask of values appearing in column c (the image of X * c).
  std::uint64_t column_image(int c) const { return col_image_[c]; }
  std::uint64_t row_image(int r) const { return row_image_[r]; }

  bool operator==(const Magma& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  int order_;
  std::vector<std::uint8_t> table_;       // row-major
  std::vector<std::uint8_t> transposed_;  // column-major copy
  std::vector<std::uint64_t> col_image_;
  std::vector<std::uint64_t> row_image_;
};

// Constructors. All validate their arguments and throw MagmaError.
Magma from_table(int n, const std::vector<std::vector<int>>& rows);
Magma constant(int n, int c);
Magma left_zero(int n);
Magma leftoid(int n, std::span<const int> f);   // x*y = f(x)
Magma rightoid(int n, std::span<const int> g);  // x*y = g(y)
Magma cyclic_group(int n);                      // x*y = (x+y) mod n
Magma symmetric_group_3();                      // order-6 nonabelian group
Magma midpoint(int odd_modulus);                // x*y = (x+y)/2 mod m
Magma affine(int p, int alpha, int beta, int gamma);  // x*y = a+bx+cy mod p
Magma saturating_add(int cap);                  // x*y = min(x+y, cap)

// Text format: first line is the order, then n rows of n space-separated
// entries. parse() also accepts the JSON form {"order": n, "table": [[..]]}.
Magma parse(std::string_view text);
std::string render(const Magma& m);

}  // namespace magmalab
