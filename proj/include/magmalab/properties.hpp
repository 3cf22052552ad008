// properties.hpp — decidable predicates for the groupoid classes the engine
// recognizes. Universal predicates report the lexicographically first
// counterexample under the scan order (x, then y, then z).
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "magmalab/magma.hpp"

namespace magmalab {

struct PropertyVerdict {
  bool holds = false;
  // Counterexample tuple when a universal claim fails; satisfying witness for
  // existential claims. Absent when a universal claim holds.
  std::optional<std::vector<int>> witness;
};

// Mutual reachability: every (x, y) has a, b with a*x = y and b*y = x;
// equivalently every column of the table is surjective.
PropertyVerdict condition_i(const Magma& m);

// Weak associativity: every (x, y, z) has w with x*(y*z) = w*z.
PropertyVerdict condition_ii(const Magma& m);

// Conditions (i) and (ii) together. A failing verdict carries the witness of
// whichever condition failed first, (i) before (ii).
PropertyVerdict is_right_feeble(const Magma& m);

// Elements x with X*x = X.
ElementSet rho(const Magma& m);
PropertyVerdict is_right_entire(const Magma& m);

// No two distinct elements are mutually reachable.
PropertyVerdict is_right_asymmetric(const Magma& m);

// Present iff every row (column) is constant; the returned map f satisfies
// x*y = f(x) (respectively x*y = g(y)).
std::optional<std::vector<int>> as_leftoid(const Magma& m);
std::optional<std::vector<int>> as_rightoid(const Magma& m);

PropertyVerdict is_associative(const Magma& m);

struct GroupStructure {
  int identity = 0;
  std::vector<int> inverse;
};
// Present iff m is associative with a two-sided identity and two-sided
// inverses for every element.
std::optional<GroupStructure> as_group(const Magma& m);

// First e whose row is the identity row (e*x = x for all x).
std::optional<int> has_left_identity(const Magma& m);

// First z whose row is constant z (z*x = z for all x).
std::optional<int> zero_fixed_element(const Magma& m);

// a*x = a forces x = e.
PropertyVerdict right_id_forcing(const Magma& m, int e);
// First e for which right_id_forcing holds, if any.
std::optional<int> right_id_forcing_identity(const Magma& m);

// {x*y, y*x} = {x, y} for every pair of distinct elements.
PropertyVerdict pair_swap_condition(const Magma& m);

// Extensional center test: m commutes with every same-order magma under the
// bin product. Bounded at order 3; larger orders throw MagmaError. A failing
// verdict's witness is the flattened table of the first non-commuting q
// followed by the first cell (x, y) where the two products differ.
PropertyVerdict is_center_member(const Magma& m);
inline constexpr int kMaxCenterOrder = 3;

// Named predicate for census filtering and the check subcommand.
// implies_right_entire marks filters that cannot match a table with a
// non-surjective column, enabling the census fast path.
struct NamedProperty {
  std::string name;
  std::function<PropertyVerdict(const Magma&)> eval;
  bool implies_right_entire = false;
};

const std::vector<NamedProperty>& property_registry();
const NamedProperty* find_property(std::string_view name);
std::vector<std::string> property_names();

}  // namespace magmalab
