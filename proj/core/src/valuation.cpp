#include "binmms/valuation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "binmms/errors.hpp"

namespace binmms {

namespace {

constexpr std::size_t kTableItemCap = 24;

/// Sizes multiplied by a common denominator so the DP runs on int64.
struct ScaledItems {
  std::vector<std::int64_t> weights;
  std::int64_t limit = 0;  // threshold or capacity, scaled
};

ScaledItems scaleToIntegers(std::span<const Rational> row, const std::vector<ItemId>& items,
                            const Rational& limit) {
  mpz_class lcm = limit.raw().get_den();
  for (ItemId e : items) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), row[e].raw().get_den_mpz_t());
  // Every partial sum stays below (|items| + 1) * max(limit, 1) * lcm.
  mpz_class bound = lcm * mpz_class(static_cast<unsigned long>(items.size() + 1));
  mpz_class limitCeil;
  mpz_cdiv_q(limitCeil.get_mpz_t(), limit.raw().get_num_mpz_t(), limit.raw().get_den_mpz_t());
  if (limitCeil > 1) bound *= limitCeil;
  if (mpz_sizeinbase(bound.get_mpz_t(), 2) > 61)
    throw CapacityExceededError("common denominator too large for exact integer search");

  ScaledItems out;
  out.weights.reserve(items.size());
  for (ItemId e : items) {
    mpq_class scaled = row[e].raw() * mpq_class(lcm);
    out.weights.push_back(static_cast<std::int64_t>(scaled.get_num().get_si()));
  }
  mpq_class scaledLimit = limit.raw() * mpq_class(lcm);
  out.limit = static_cast<std::int64_t>(scaledLimit.get_num().get_si());
  return out;
}

// Sequential placement DP: items are appended in some order to an open bin.
// Covering closes the bin as soon as it reaches the threshold; packing opens a
// new bin when the next item does not fit. dp[mask] keeps the best
// (count, fill) over all orders of `mask`, which is exact for both problems.
struct CoverState {
  std::int32_t count = -1;
  std::int64_t fill = 0;
};

struct PackState {
  std::int32_t bins = std::numeric_limits<std::int32_t>::max();
  std::int64_t fill = 0;
};

constexpr std::uint8_t kNoParent = 0xff;

template <typename State, typename Step, typename Better>
std::vector<State> runSubsetDp(std::size_t k, State start, Step step, Better better,
                               std::vector<std::uint8_t>* parents) {
  const std::size_t full = std::size_t{1} << k;
  std::vector<State> dp(full);
  dp[0] = start;
  if (parents) parents->assign(full, kNoParent);
  for (std::size_t mask = 0; mask < full; ++mask) {
    const State cur = dp[mask];
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t bit = std::size_t{1} << j;
      if (mask & bit) continue;
      const State next = step(cur, j);
      State& slot = dp[mask | bit];
      if (better(next, slot)) {
        slot = next;
        if (parents) (*parents)[mask | bit] = static_cast<std::uint8_t>(j);
      }
    }
  }
  return dp;
}

auto coverStep(const ScaledItems& s) {
  return [&s](CoverState st, std::size_t j) {
    st.fill += s.weights[j];
    if (st.fill >= s.limit) {
      ++st.count;
      st.fill = 0;
    }
    return st;
  };
}

bool coverBetter(const CoverState& a, const CoverState& b) {
  return a.count > b.count || (a.count == b.count && a.fill > b.fill);
}

auto packStep(const ScaledItems& s) {
  return [&s](PackState st, std::size_t j) {
    if (st.fill + s.weights[j] <= s.limit) {
      st.fill += s.weights[j];
    } else {
      ++st.bins;
      st.fill = s.weights[j];
    }
    return st;
  };
}

bool packBetter(const PackState& a, const PackState& b) {
  return a.bins < b.bins || (a.bins == b.bins && a.fill < b.fill);
}

std::vector<std::size_t> placementOrder(const std::vector<std::uint8_t>& parents, std::size_t k) {
  std::vector<std::size_t> order;
  std::size_t mask = (std::size_t{1} << k) - 1;
  while (mask != 0) {
    const std::size_t j = parents[mask];
    order.push_back(j);
    mask &= ~(std::size_t{1} << j);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

void requireIndices(std::span<const Rational> row, const Bundle& bundle) {
  for (ItemId e : bundle)
    if (e >= row.size())
      throw ContractViolationError("item index " + std::to_string(e) + " out of range");
}

void requireAgent(const Instance& instance, AgentId agent) {
  if (agent >= instance.agentCount())
    throw ContractViolationError("agent index " + std::to_string(agent) + " out of range");
}

}  // namespace

CoverResult coverAtThreshold(std::span<const Rational> row, const Bundle& bundle,
                             const Rational& threshold, const SearchLimits& limits) {
  requireIndices(row, bundle);
  if (!threshold.isPositive())
    throw ContractViolationError("covering threshold must be positive");
  CoverResult result;
  if (bundle.empty()) return result;
  if (bundle.size() > limits.maxBundleItems || bundle.size() > kTableItemCap)
    throw CapacityExceededError("bundle of " + std::to_string(bundle.size()) +
                                " items exceeds exact covering cap of " +
                                std::to_string(limits.maxBundleItems) +
                                "; use the floor(s_i(S)) upper bound instead");

  const std::vector<ItemId> items(bundle.begin(), bundle.end());
  const ScaledItems scaled = scaleToIntegers(row, items, threshold);
  std::vector<std::uint8_t> parents;
  const auto dp = runSubsetDp(items.size(), CoverState{0, 0}, coverStep(scaled), coverBetter,
                              &parents);
  const std::size_t k = items.size();
  result.value = static_cast<std::size_t>(dp[(std::size_t{1} << k) - 1].count);

  std::vector<Bundle> bins;
  Bundle open;
  std::int64_t fill = 0;
  for (std::size_t j : placementOrder(parents, k)) {
    open.push_back(items[j]);
    fill += scaled.weights[j];
    if (fill >= scaled.limit) {
      bins.push_back(std::move(open));
      open.clear();
      fill = 0;
    }
  }
  if (!open.empty()) {
    if (bins.empty()) {
      bins.push_back(std::move(open));
    } else {
      bins.back().insert(bins.back().end(), open.begin(), open.end());
    }
  }
  result.witness = makeBinPartition(row, std::move(bins));
  return result;
}

PackResult packAtCapacity(std::span<const Rational> row, const Bundle& bundle,
                          const Rational& capacity, const SearchLimits& limits) {
  requireIndices(row, bundle);
  PackResult result;
  if (bundle.empty()) return result;
  for (ItemId e : bundle)
    if (row[e] > capacity)
      throw ContractViolationError("item " + std::to_string(e) + " does not fit in a bin");

  // FFD is optimal whenever it meets the volume lower bound.
  Rational total = bundleSize(row, bundle);
  const std::int64_t lower = (total / capacity).ceil();
  if (capacity == Rational(1)) {
    BinPartition ffd = firstFitDecreasing(row, bundle);
    if (static_cast<std::int64_t>(ffd.bins.size()) == lower) {
      result.cost = ffd.bins.size();
      result.witness = std::move(ffd);
      return result;
    }
  }
  if (bundle.size() > limits.maxBundleItems || bundle.size() > kTableItemCap)
    throw CapacityExceededError("bundle of " + std::to_string(bundle.size()) +
                                " items exceeds exact packing cap of " +
                                std::to_string(limits.maxBundleItems) +
                                "; use the first-fit-decreasing bound instead");

  const std::vector<ItemId> items(bundle.begin(), bundle.end());
  const ScaledItems scaled = scaleToIntegers(row, items, capacity);
  std::vector<std::uint8_t> parents;
  const auto dp = runSubsetDp(items.size(), PackState{0, scaled.limit}, packStep(scaled),
                              packBetter, &parents);
  const std::size_t k = items.size();
  result.cost = static_cast<std::size_t>(dp[(std::size_t{1} << k) - 1].bins);

  std::vector<Bundle> bins;
  std::int64_t fill = scaled.limit;
  for (std::size_t j : placementOrder(parents, k)) {
    if (fill + scaled.weights[j] <= scaled.limit) {
      fill += scaled.weights[j];
      bins.back().push_back(items[j]);
    } else {
      bins.push_back({items[j]});
      fill = scaled.weights[j];
    }
  }
  result.witness = makeBinPartition(row, std::move(bins));
  return result;
}

CoverResult coveringValue(const Instance& instance, AgentId agent, const Bundle& bundle,
                          const SearchLimits& limits) {
  requireAgent(instance, agent);
  return coverAtThreshold(instance.row(agent), bundle, Rational(1), limits);
}

PackResult packingCost(const Instance& instance, AgentId agent, const Bundle& bundle,
                       const SearchLimits& limits) {
  requireAgent(instance, agent);
  return packAtCapacity(instance.row(agent), bundle, Rational(1), limits);
}

BinPartition firstFitDecreasing(std::span<const Rational> row, const Bundle& bundle) {
  requireIndices(row, bundle);
  std::vector<ItemId> order(bundle.begin(), bundle.end());
  std::stable_sort(order.begin(), order.end(),
                   [&](ItemId a, ItemId b) { return row[a] > row[b]; });
  const Rational one(1);
  std::vector<Bundle> bins;
  std::vector<Rational> loads;
  for (ItemId e : order) {
    bool placed = false;
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (loads[b] + row[e] <= one) {
        bins[b].push_back(e);
        loads[b] += row[e];
        placed = true;
        break;
      }
    }
    if (!placed) {
      bins.push_back({e});
      loads.push_back(row[e]);
    }
  }
  return makeBinPartition(row, std::move(bins));
}

std::size_t maxDisjointPairs(std::span<const Rational> sortedSizes) {
  const bool ascending = std::is_sorted(sortedSizes.begin(), sortedSizes.end());
  const bool descending =
      std::is_sorted(sortedSizes.begin(), sortedSizes.end(), std::greater<>());
  if (!ascending && !descending)
    throw ContractViolationError("maxDisjointPairs requires sorted input");
  std::vector<Rational> sizes(sortedSizes.begin(), sortedSizes.end());
  if (!ascending) std::reverse(sizes.begin(), sizes.end());

  const Rational one(1);
  std::size_t pairs = 0;
  std::size_t lo = 0;
  std::size_t hi = sizes.size();
  while (hi > 0 && lo + 1 < hi) {
    // Smallest remaining with the largest one it fits; an unpairable largest is dropped.
    if (sizes[lo] + sizes[hi - 1] <= one) {
      ++pairs;
      ++lo;
    }
    --hi;
  }
  return pairs;
}

SubsetValueTable coverValuesForAllSubsets(std::span<const Rational> row,
                                          const std::vector<ItemId>& items) {
  if (items.size() > kTableItemCap)
    throw CapacityExceededError("subset table limited to " + std::to_string(kTableItemCap) +
                                " items");
  const ScaledItems scaled = scaleToIntegers(row, items, Rational(1));
  const auto dp =
      runSubsetDp(items.size(), CoverState{0, 0}, coverStep(scaled), coverBetter, nullptr);
  SubsetValueTable table{items, {}};
  table.values.reserve(dp.size());
  for (const auto& st : dp) table.values.push_back(static_cast<std::uint8_t>(st.count));
  return table;
}

SubsetValueTable packCostsForAllSubsets(std::span<const Rational> row,
                                        const std::vector<ItemId>& items) {
  if (items.size() > kTableItemCap)
    throw CapacityExceededError("subset table limited to " + std::to_string(kTableItemCap) +
                                " items");
  const ScaledItems scaled = scaleToIntegers(row, items, Rational(1));
  const auto dp = runSubsetDp(items.size(), PackState{0, scaled.limit}, packStep(scaled),
                              packBetter, nullptr);
  SubsetValueTable table{items, {}};
  table.values.reserve(dp.size());
  for (const auto& st : dp) table.values.push_back(static_cast<std::uint8_t>(st.bins));
  return table;
}

}  // namespace binmms
