#ifndef BINMMS_VALUATION_HPP
#define BINMMS_VALUATION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "binmms/model.hpp"

namespace binmms {

/// Caps for the exponential exact oracles.
struct SearchLimits {
  /// coveringValue / packingCost: subset DP over at most this many items.
  std::size_t maxBundleItems = 20;
  /// mmsCover / mmsPack: item and agent caps for partition enumeration.
  std::size_t maxMmsItems = 12;
  std::size_t maxMmsAgents = 4;
};

struct CoverResult {
  std::size_t value = 0;
  /// `value` covering bins, leftovers appended to the last one; a single
  /// throwaway bin when value == 0 and the bundle is non-empty.
  BinPartition witness;
};

struct PackResult {
  std::size_t cost = 0;
  BinPartition witness;
};

/// v_i(S): maximum number of bins with total >= 1.
CoverResult coveringValue(const Instance& instance, AgentId agent, const Bundle& bundle,
                          const SearchLimits& limits = {});

/// c_i(S): minimum number of bins with total <= 1.
PackResult packingCost(const Instance& instance, AgentId agent, const Bundle& bundle,
                       const SearchLimits& limits = {});

/// Maximum number of disjoint bins whose total reaches `threshold`, over
/// sizes taken from `row`. Same witness convention as coveringValue.
CoverResult coverAtThreshold(std::span<const Rational> row, const Bundle& bundle,
                             const Rational& threshold, const SearchLimits& limits = {});

/// Minimum number of bins of the given capacity (every item must fit alone).
PackResult packAtCapacity(std::span<const Rational> row, const Bundle& bundle,
                          const Rational& capacity, const SearchLimits& limits = {});

/// First-fit-decreasing packing into unit bins (an upper bound on c_i).
BinPartition firstFitDecreasing(std::span<const Rational> row, const Bundle& bundle);

/// Maximum number of disjoint pairs with pair total <= 1. Input must be
/// sorted (either direction); throws ContractViolationError otherwise.
std::size_t maxDisjointPairs(std::span<const Rational> sortedSizes);

/// Per-subset exact values over a fixed item list; mask bit b stands for items[b].
struct SubsetValueTable {
  std::vector<ItemId> items;
  std::vector<std::uint8_t> values;
};

/// v(mask) for every subset of `items` (at most 24 items).
SubsetValueTable coverValuesForAllSubsets(std::span<const Rational> row,
                                          const std::vector<ItemId>& items);
/// c(mask) for every subset of `items` (at most 24 items).
SubsetValueTable packCostsForAllSubsets(std::span<const Rational> row,
                                        const std::vector<ItemId>& items);

}  // namespace binmms

#endif  // BINMMS_VALUATION_HPP
