// census.hpp — exhaustive enumeration of all magmas of a fixed order with
// property filtering, sharded scanning and counting up to isomorphism.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "magmalab/magma.hpp"
#include "magmalab/properties.hpp"

namespace magmalab {

inline constexpr int kMaxFullCensusOrder = 3;      // without the long-run flag
inline constexpr int kMaxLongRunCensusOrder = 4;   // 4^16 tables, opt-in
inline constexpr int kMaxRestrictedCensusOrder = 5;

struct CensusOptions {
  int shards = 0;  // 0 = one shard per available core (capped at 8)
  bool up_to_iso = false;
  bool allow_long_run = false;
};

struct CensusReport {
  int order = 0;
  std::string filter;
  std::uint64_t total = 0;
  std::uint64_t matches = 0;
  std::optional<std::uint64_t> matches_up_to_iso;
  double elapsed_seconds = 0.0;
  int shards = 1;
};

// Scans all order^(order^2) tables in ascending row-major base-order code,
// applying the filter to each. Orders above 3 require allow_long_run. Shard
// boundaries are fixed prefixes of the first row, so results are identical
// for any shard count.
CensusReport enumerate_magmas(int order, const NamedProperty& filter,
                              const CensusOptions& options = {});

// Scans only tables whose every column is a permutation ((order!)^order
// candidates) before applying the filter.
CensusReport enumerate_right_entire(int order, const NamedProperty& filter,
                                    const CensusOptions& options = {});

// Visits every order^(order^2) table in ascending row-major code on a single
// thread; the visitor returns false to stop early. Bounded like
// enumerate_magmas without the long-run flag.
void for_each_magma(int order, const std::function<bool(const Magma&)>& visit);

int default_shard_count();

}  // namespace magmalab
