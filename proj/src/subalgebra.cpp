#include "magmalab/subalgebra.hpp"

#include <algorithm>

namespace magmalab {

bool is_subgroupoid(const Magma& m, ElementSet a) {
  const int n = m.order();
  if (a.empty()) return false;
  if (a.bits() >> n) return false;
  for (int x = 0; x < n; ++x) {
    if (!a.contains(x)) continue;
    for (int y = 0; y < n; ++y) {
      if (!a.contains(y)) continue;
      if (!a.contains(m.at(x, y))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> subgroupoids(const Magma& m) {
  const int n = m.order();
  if (n > kMaxSubgroupoidOrder)
    throw MagmaError("subgroupoid enumeration is bounded at order " +
                     std::to_string(kMaxSubgroupoidOrder));
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    ElementSet a(bits);
    if (is_subgroupoid(m, a)) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

PropertyVerdict is_divisible(const Magma& m, ElementSet a) {
  if (!is_subgroupoid(m, a)) throw MagmaError("is_divisible requires a subgroupoid");
  const int n = m.order();
  for (int g = 0; g < n; ++g) {
    if (a.contains(g)) continue;
    for (int x = 0; x < n; ++x) {
      if (!a.contains(x)) continue;
      const int y = m.at(g, x);
      if (a.contains(y)) return {false, std::vector<int>{g, x, y}};
    }
  }
  return {true, std::nullopt};
}

std::vector<ElementSet> divisible_subgroupoids(const Magma& m) {
  std::vector<ElementSet> out;
  for (ElementSet a : subgroupoids(m))
    if (is_divisible(m, a).holds) out.push_back(a);
  return out;
}

Magma restrict_to(const Magma& m, ElementSet a) {
  if (!is_subgroupoid(m, a)) throw MagmaError("restriction requires a subgroupoid");
  const std::vector<int> members = a.members();
  const int k = static_cast<int>(members.size());
  std::vector<int> position(static_cast<std::size_t>(m.order()), -1);
  for (int i = 0; i < k; ++i) position[members[i]] = i;
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      entries[i * k + j] = static_cast<std::uint8_t>(position[m.at(members[i], members[j])]);
  return Magma(k, std::move(entries));
}

}  // namespace magmalab
