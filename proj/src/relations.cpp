#include "magmalab/relations.hpp"

namespace magmalab {

Relation::Relation(int order, std::vector<std::uint64_t> rows)
    : order_(order), rows_(std::move(rows)) {
  if (order < 1 || rows_.size() != static_cast<std::size_t>(order))
    throw MagmaError("relation dimensions must match the carrier");
}

Relation leq(const Magma& m) {
  const int n = m.order();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) rows[x] = m.column_image(x);
  return Relation(n, std::move(rows));
}

PropertyVerdict is_reflexive(const Relation& r) {
  for (int x = 0; x < r.order(); ++x)
    if (!r.at(x, x)) return {false, std::vector<int>{x}};
  return {true, std::nullopt};
}

PropertyVerdict is_antisymmetric(const Relation& r) {
  const int n = r.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (r.at(x, y) && r.at(y, x)) return {false, std::vector<int>{x, y}};
    }
  return {true, std::nullopt};
}

PropertyVerdict is_transitive(const Relation& r) {
  const int n = r.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!r.at(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (r.at(y, z) && !r.at(x, z)) return {false, std::vector<int>{x, y, z}};
    }
  return {true, std::nullopt};
}

PropertyVerdict dominated_elements(const Magma& m) {
  const int n = m.order();
  int surjective_row = -1;
  for (int a = 0; a < n; ++a)
    if (m.row_image(a) == ElementSet::full(n).bits()) {
      surjective_row = a;
      break;
    }
  if (surjective_row < 0) return {true, std::nullopt};
  const Relation r = leq(m);
  for (int y = 0; y < n; ++y) {
    bool dominated = false;
    for (int x = 0; x < n && !dominated; ++x) dominated = r.at(x, y);
    if (!dominated) return {false, std::vector<int>{surjective_row, y}};
  }
  return {true, std::vector<int>{surjective_row}};
}

}  // namespace magmalab
