// constructions.hpp — binary constructions on magmas: the componentwise
// direct product and the bin product on same-carrier operations.
#pragma once

#include <utility>

#include "magmalab/magma.hpp"

namespace magmalab {

// Row-major pair encoding for product carriers: (x, y) -> x * inner + y.
struct ProductIndexing {
  int outer = 1;
  int inner = 1;

  int encode(int x, int y) const { return x * inner + y; }
  std::pair<int, int> decode(int z) const { return {z / inner, z % inner}; }
  int order() const { return outer * inner; }
};

// (x, y) v (u, v) = (x*u, y.v) on the carrier A x B. Rejects products whose
// order exceeds max_order.
Magma direct_product(const Magma& a, const Magma& b, int max_order = kMaxOrder);

// x [] y = (x*y) . (y*x): the first factor supplies the inner products, the
// second the outer operation. Both factors must share one carrier.
Magma bin_product(const Magma& a, const Magma& b);

}  // namespace magmalab
