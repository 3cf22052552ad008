// relations.hpp — the reachability relation x <= y (some a has a*x = y) and
// its order-theoretic properties.
#pragma once

#include "magmalab/magma.hpp"
#include "magmalab/properties.hpp"

namespace magmalab {

class Relation {
 public:
  Relation(int order, std::vector<std::uint64_t> rows);

  int order() const { return order_; }
  bool at(int x, int y) const { return (rows_[x] >> y) & 1u; }
  std::uint64_t row_bits(int x) const { return rows_[x]; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  int order_;
  std::vector<std::uint64_t> rows_;  // rows_[x] bit y set iff x <= y
};

// x <= y iff y lies in the image of column x.
Relation leq(const Magma& m);

PropertyVerdict is_reflexive(const Relation& r);
PropertyVerdict is_antisymmetric(const Relation& r);
PropertyVerdict is_transitive(const Relation& r);

// When some row a is surjective, checks that every y has some x with x <= y;
// vacuously true when no row is surjective. A holding verdict carries [a]
// in the non-vacuous case and no witness in the vacuous one.
PropertyVerdict dominated_elements(const Magma& m);

}  // namespace magmalab
