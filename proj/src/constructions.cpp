#include "magmalab/constructions.hpp"

namespace magmalab {

Magma direct_product(const Magma& a, const Magma& b, int max_order) {
  const ProductIndexing idx{a.order(), b.order()};
  if (idx.order() > max_order)
    throw MagmaError("product order " + std::to_string(idx.order()) +
                     " exceeds the configured maximum " + std::to_string(max_order));
  const int n = idx.order();
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y)
      for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v)
          entries[idx.encode(x, y) * n + idx.encode(u, v)] =
              static_cast<std::uint8_t>(idx.encode(a.at(x, u), b.at(y, v)));
  return Magma(n, std::move(entries));
}

Magma bin_product(const Magma& a, const Magma& b) {
  if (a.order() != b.order())
    throw MagmaError("bin product requires operations on the same carrier");
  const int n = a.order();
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      entries[x * n + y] = static_cast<std::uint8_t>(b.at(a.at(x, y), a.at(y, x)));
  return Magma(n, std::move(entries));
}

}  // namespace magmalab
