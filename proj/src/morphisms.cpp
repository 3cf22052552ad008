#include "magmalab/morphisms.hpp"

#include <algorithm>
#include <numeric>

namespace magmalab {

bool is_homomorphism(const Magma& a, const Magma& b, std::span<const int> map) {
  if (map.size() != static_cast<std::size_t>(a.order())) return false;
  for (int v : map)
    if (v < 0 || v >= b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (map[a.at(x, y)] != b.at(map[x], map[y])) return false;
  return true;
}

namespace {

// Partial maps are consistent when every pair whose product is already
// assigned satisfies the homomorphism law.
bool consistent_prefix(const Magma& a, const Magma& b, const std::vector<int>& map, int defined) {
  for (int x = 0; x < defined; ++x)
    for (int y = 0; y < defined; ++y) {
      const int t = a.at(x, y);
      if (t < defined && b.at(map[x], map[y]) != map[t]) return false;
    }
  return true;
}

void search_homs(const Magma& a, const Magma& b, bool surjective_only, std::vector<int>& map,
                 int next, std::vector<std::vector<int>>& out) {
  const int na = a.order(), nb = b.order();
  if (next == na) {
    if (surjective_only) {
      std::uint64_t hit = 0;
      for (int v : map) hit |= std::uint64_t{1} << v;
      if (hit != ElementSet::full(nb).bits()) return;
    }
    out.push_back(map);
    return;
  }
  for (int v = 0; v < nb; ++v) {
    map[next] = v;
    if (consistent_prefix(a, b, map, next + 1)) search_homs(a, b, surjective_only, map, next + 1, out);
  }
}

}  // namespace

std::vector<std::vector<int>> homomorphisms(const Magma& a, const Magma& b, bool surjective_only) {
  if (a.order() > kMaxHomOrder || b.order() > kMaxHomOrder)
    throw MagmaError("homomorphism enumeration is bounded at order " +
                     std::to_string(kMaxHomOrder));
  std::vector<std::vector<int>> out;
  std::vector<int> map(static_cast<std::size_t>(a.order()), 0);
  search_homs(a, b, surjective_only, map, 0, out);
  return out;
}

Magma conjugate(const Magma& m, std::span<const int> sigma) {
  const int n = m.order();
  if (sigma.size() != static_cast<std::size_t>(n)) throw MagmaError("permutation size mismatch");
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      entries[sigma[x] * n + sigma[y]] = static_cast<std::uint8_t>(sigma[m.at(x, y)]);
  return Magma(n, std::move(entries));
}

std::optional<std::vector<int>> is_isomorphic(const Magma& a, const Magma& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  if (n > kMaxIsoOrder)
    throw MagmaError("isomorphism testing is bounded at order " + std::to_string(kMaxIsoOrder));
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (sigma[a.at(x, y)] != b.at(sigma[x], sigma[y])) {
          ok = false;
          break;
        }
    if (ok) return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

CanonicalForm canonical_form(const Magma& m) {
  const int n = m.order();
  if (n > kMaxCanonOrder)
    throw MagmaError("canonical forms are bounded at order " + std::to_string(kMaxCanonOrder));
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  CanonicalForm best = m.table();
  CanonicalForm candidate(best.size());
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        candidate[sigma[x] * n + sigma[y]] = static_cast<std::uint8_t>(sigma[m.at(x, y)]);
    if (candidate < best) best = candidate;
  }
  return best;
}

}  // namespace magmalab
