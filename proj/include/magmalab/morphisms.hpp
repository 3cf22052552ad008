// morphisms.hpp — homomorphism enumeration, isomorphism testing and the
// canonical form used for counting up to isomorphism.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "magmalab/magma.hpp"

namespace magmalab {

inline constexpr int kMaxHomOrder = 6;    // backtracking over |b|^|a| maps
inline constexpr int kMaxCanonOrder = 6;  // minimum over n! relabelings
inline constexpr int kMaxIsoOrder = 8;

// The lexicographically least flattened table over all relabelings. Two
// magmas are isomorphic iff their canonical forms are equal.
using CanonicalForm = std::vector<std::uint8_t>;

bool is_homomorphism(const Magma& a, const Magma& b, std::span<const int> map);

// All maps satisfying map(x*y) = map(x).map(y), in lexicographic order,
// optionally restricted to surjections. Bounded at order 6 on both sides.
std::vector<std::vector<int>> homomorphisms(const Magma& a, const Magma& b,
                                            bool surjective_only = false);

// First permutation sigma (lexicographic) with sigma(x*y) = sigma(x).sigma(y),
// or absent. Magmas of different orders are never isomorphic.
std::optional<std::vector<int>> is_isomorphic(const Magma& a, const Magma& b);

// Relabel every element x as sigma(x).
Magma conjugate(const Magma& m, std::span<const int> sigma);

CanonicalForm canonical_form(const Magma& m);

}  // namespace magmalab
