// subalgebra.hpp — subgroupoid enumeration, the divisibility property and
// restriction of a magma to a closed subset.
#pragma once

#include "magmalab/magma.hpp"
#include "magmalab/properties.hpp"

namespace magmalab {

inline constexpr int kMaxSubgroupoidOrder = 16;

// True iff a is a nonempty subset of the carrier closed under the operation.
bool is_subgroupoid(const Magma& m, ElementSet a);

// All nonempty closed subsets, sorted by (size, lexicographic member list).
// Bounded at order 16 (2^n subset scan).
std::vector<ElementSet> subgroupoids(const Magma& m);

// g*x = y with x, y in a forces g in a. The subset must be a subgroupoid.
// A failing verdict's witness is (g, x, y), scanning g ascending outside a,
// then x ascending inside a.
PropertyVerdict is_divisible(const Magma& m, ElementSet a);

std::vector<ElementSet> divisible_subgroupoids(const Magma& m);

// The induced operation on a, with members re-indexed to 0..|a|-1 in
// increasing order.
Magma restrict_to(const Magma& m, ElementSet a);

}  // namespace magmalab
