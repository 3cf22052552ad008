#include "magmalab/properties.hpp"

#include <algorithm>
#include <array>

namespace magmalab {

namespace {
PropertyVerdict pass() { return {true, std::nullopt}; }
PropertyVerdict fail(std::vector<int> witness) { return {false, std::move(witness)}; }
}  // namespace

PropertyVerdict condition_i(const Magma& m) {
  const int n = m.order();
  for (int x = 0; x < n; ++x) {
    const std::uint64_t image = m.column_image(x);
    if (image == ElementSet::full(n).bits()) continue;
    for (int y = 0; y < n; ++y)
      if (!((image >> y) & 1u)) return fail({x, y});
  }
  return pass();
}

PropertyVerdict condition_ii(const Magma& m) {
  const int n = m.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int u = m.at(x, m.at(y, z));
        if (!((m.column_image(z) >> u) & 1u)) return fail({x, y, z});
      }
  return pass();
}

PropertyVerdict is_right_feeble(const Magma& m) {
  PropertyVerdict first = condition_i(m);
  if (!first.holds) return first;
  return condition_ii(m);
}

ElementSet rho(const Magma& m) {
  const int n = m.order();
  ElementSet out;
  for (int x = 0; x < n; ++x)
    if (m.column_image(x) == ElementSet::full(n).bits()) out.add(x);
  return out;
}

PropertyVerdict is_right_entire(const Magma& m) {
  const int n = m.order();
  const ElementSet r = rho(m);
  if (r == ElementSet::full(n)) return pass();
  for (int x = 0; x < n; ++x) {
    if (r.contains(x)) continue;
    for (int y = 0; y < n; ++y)
      if (!((m.column_image(x) >> y) & 1u)) return fail({x, y});
  }
  return pass();  // unreachable
}

PropertyVerdict is_right_asymmetric(const Magma& m) {
  const int n = m.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const bool y_from_x = (m.column_image(x) >> y) & 1u;
      const bool x_from_y = (m.column_image(y) >> x) & 1u;
      if (y_from_x && x_from_y) return fail({x, y});
    }
  return pass();
}

std::optional<std::vector<int>> as_leftoid(const Magma& m) {
  const int n = m.order();
  std::vector<int> f(n);
  for (int x = 0; x < n; ++x) {
    f[x] = m.at(x, 0);
    for (int y = 1; y < n; ++y)
      if (m.at(x, y) != f[x]) return std::nullopt;
  }
  return f;
}

std::optional<std::vector<int>> as_rightoid(const Magma& m) {
  const int n = m.order();
  std::vector<int> g(n);
  for (int y = 0; y < n; ++y) {
    g[y] = m.at(0, y);
    for (int x = 1; x < n; ++x)
      if (m.at(x, y) != g[y]) return std::nullopt;
  }
  return g;
}

PropertyVerdict is_associative(const Magma& m) {
  const int n = m.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (m.at(m.at(x, y), z) != m.at(x, m.at(y, z))) return fail({x, y, z});
  return pass();
}

std::optional<GroupStructure> as_group(const Magma& m) {
  if (!is_associative(m).holds) return std::nullopt;
  const int n = m.order();
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool twosided = true;
    for (int x = 0; x < n; ++x)
      if (m.at(c, x) != x || m.at(x, c) != x) {
        twosided = false;
        break;
      }
    if (twosided) e = c;
  }
  if (e < 0) return std::nullopt;
  GroupStructure g;
  g.identity = e;
  g.inverse.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (m.at(x, y) == e && m.at(y, x) == e) {
        g.inverse[x] = y;
        break;
      }
    if (g.inverse[x] < 0) return std::nullopt;
  }
  return g;
}

std::optional<int> has_left_identity(const Magma& m) {
  const int n = m.order();
  for (int e = 0; e < n; ++e) {
    bool identity_row = true;
    for (int x = 0; x < n; ++x)
      if (m.at(e, x) != x) {
        identity_row = false;
        break;
      }
    if (identity_row) return e;
  }
  return std::nullopt;
}

std::optional<int> zero_fixed_element(const Magma& m) {
  const int n = m.order();
  for (int z = 0; z < n; ++z) {
    bool constant_row = true;
    for (int x = 0; x < n; ++x)
      if (m.at(z, x) != z) {
        constant_row = false;
        break;
      }
    if (constant_row) return z;
  }
  return std::nullopt;
}

PropertyVerdict right_id_forcing(const Magma& m, int e) {
  const int n = m.order();
  if (e < 0 || e >= n) throw MagmaError("right_id_forcing: element out of range");
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      if (m.at(a, x) == a && x != e) return fail({a, x});
  return pass();
}

std::optional<int> right_id_forcing_identity(const Magma& m) {
  for (int e = 0; e < m.order(); ++e)
    if (right_id_forcing(m, e).holds) return e;
  return std::nullopt;
}

PropertyVerdict pair_swap_condition(const Magma& m) {
  const int n = m.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const int xy = m.at(x, y), yx = m.at(y, x);
      const bool same = (xy == x && yx == y) || (xy == y && yx == x);
      if (!same) return fail({x, y});
    }
  return pass();
}

PropertyVerdict is_center_member(const Magma& m) {
  const int n = m.order();
  if (n > kMaxCenterOrder)
    throw MagmaError("center membership is only decided up to order " +
                     std::to_string(kMaxCenterOrder));
  const int cells = n * n;
  std::uint64_t count = 1;
  for (int i = 0; i < cells; ++i) count *= n;

  // Scan all same-order tables q in ascending row-major order; compare the
  // two bin products cell by cell without materializing either one.
  std::array<std::uint8_t, 9> q{};
  for (std::uint64_t code = 0; code < count; ++code) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int mq = q[m.at(x, y) * n + m.at(y, x)];
        const int qm = m.at(q[x * n + y], q[y * n + x]);
        if (mq != qm) {
          std::vector<int> witness(q.begin(), q.begin() + cells);
          witness.push_back(x);
          witness.push_back(y);
          return fail(std::move(witness));
        }
      }
    // next table
    for (int i = cells - 1; i >= 0; --i) {
      if (++q[i] < n) break;
      q[i] = 0;
    }
  }
  return pass();
}

namespace {

PropertyVerdict map_classification(const std::optional<std::vector<int>>& map, const Magma& m,
                                   bool by_rows) {
  if (map) return {true, *map};
  const int n = m.order();
  for (int x = 0; x < n; ++x)
    for (int y = 1; y < n; ++y) {
      const int base = by_rows ? m.at(x, 0) : m.at(0, x);
      const int cell = by_rows ? m.at(x, y) : m.at(y, x);
      if (cell != base) return {false, std::vector<int>{x, y}};
    }
  return {false, std::nullopt};
}

std::vector<NamedProperty> make_registry() {
  std::vector<NamedProperty> reg;
  reg.push_back({"right-feeble", [](const Magma& m) { return is_right_feeble(m); }, true});
  reg.push_back({"right-entire", [](const Magma& m) { return is_right_entire(m); }, true});
  reg.push_back({"condition-i", [](const Magma& m) { return condition_i(m); }, true});
  reg.push_back({"condition-ii", [](const Magma& m) { return condition_ii(m); }, false});
  reg.push_back(
      {"right-asymmetric", [](const Magma& m) { return is_right_asymmetric(m); }, false});
  reg.push_back({"associative", [](const Magma& m) { return is_associative(m); }, false});
  reg.push_back({"leftoid",
                 [](const Magma& m) { return map_classification(as_leftoid(m), m, true); },
                 false});
  reg.push_back({"rightoid",
                 [](const Magma& m) { return map_classification(as_rightoid(m), m, false); },
                 false});
  reg.push_back({"constant",
                 [](const Magma& m) {
                   auto f = as_leftoid(m);
                   auto g = as_rightoid(m);
                   if (f && g) return PropertyVerdict{true, std::vector<int>{(*f)[0]}};
                   return PropertyVerdict{false, std::nullopt};
                 },
                 false});
  reg.push_back({"group",
                 [](const Magma& m) {
                   auto g = as_group(m);
                   if (!g) return PropertyVerdict{false, std::nullopt};
                   std::vector<int> witness{g->identity};
                   witness.insert(witness.end(), g->inverse.begin(), g->inverse.end());
                   return PropertyVerdict{true, std::move(witness)};
                 },
                 false});
  reg.push_back({"left-identity",
                 [](const Magma& m) {
                   auto e = has_left_identity(m);
                   if (e) return PropertyVerdict{true, std::vector<int>{*e}};
                   return PropertyVerdict{false, std::nullopt};
                 },
                 false});
  reg.push_back({"zero-fixed",
                 [](const Magma& m) {
                   auto z = zero_fixed_element(m);
                   if (z) return PropertyVerdict{true, std::vector<int>{*z}};
                   return PropertyVerdict{false, std::nullopt};
                 },
                 false});
  reg.push_back({"right-id-forcing",
                 [](const Magma& m) {
                   auto e = right_id_forcing_identity(m);
                   if (e) return PropertyVerdict{true, std::vector<int>{*e}};
                   return PropertyVerdict{false, std::nullopt};
                 },
                 false});
  reg.push_back({"pair-swap", [](const Magma& m) { return pair_swap_condition(m); }, false});
  reg.push_back({"center", [](const Magma& m) { return is_center_member(m); }, false});
  reg.push_back({"always-true", [](const Magma&) { return PropertyVerdict{true, std::nullopt}; },
                 false});
  return reg;
}

}  // namespace

const std::vector<NamedProperty>& property_registry() {
  static const std::vector<NamedProperty> reg = make_registry();
  return reg;
}

const NamedProperty* find_property(std::string_view name) {
  for (const auto& p : property_registry())
    if (p.name == name) return &p;
  return nullptr;
}

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& p : property_registry()) names.push_back(p.name);
  return names;
}

}  // namespace magmalab
