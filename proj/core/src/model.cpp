#include "binmms/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "binmms/errors.hpp"

namespace binmms {

Instance::Instance(std::vector<std::vector<Rational>> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidSizeError("instance needs at least one agent");
  const std::size_t m = sizes_.front().size();
  if (m == 0) throw InvalidSizeError("instance needs at least one item");
  const Rational one(1);
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (sizes_[i].size() != m)
      throw InvalidSizeError("agent " + std::to_string(i) + " has " +
                             std::to_string(sizes_[i].size()) + " sizes, expected " +
                             std::to_string(m));
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& s = sizes_[i][j];
      if (!s.isPositive() || s > one)
        throw InvalidSizeError("size of item " + std::to_string(j) + " for agent " +
                               std::to_string(i) + " is " + s.str() + ", outside (0,1]");
    }
  }
}

std::string_view toString(Model model) {
  return model == Model::Covering ? "covering" : "packing";
}

Model parseModel(std::string_view text) {
  if (text == "covering" || text == "cover") return Model::Covering;
  if (text == "packing" || text == "pack") return Model::Packing;
  throw ContractViolationError("unknown model '" + std::string(text) + "'");
}

SizeClass classifyItem(const Rational& size, ClassScheme scheme) {
  static const Rational kOne(1);
  static const Rational kThird(1, 3);
  static const Rational kHalf(1, 2);
  static const Rational kTwoThirds(2, 3);
  if (!size.isPositive() || size > kOne)
    throw InvalidSizeError("size " + size.str() + " outside (0,1]");
  switch (scheme) {
    case ClassScheme::CoverCardinal:
      if (size >= kTwoThirds) return SizeClass::Large;
      if (size > kThird) return SizeClass::Medium;
      return SizeClass::Small;
    case ClassScheme::HalfThird:
      if (size > kHalf) return SizeClass::Large;
      if (size > kThird) return SizeClass::Medium;
      return SizeClass::Small;
  }
  return SizeClass::Small;
}

Rational bundleSize(std::span<const Rational> row, const Bundle& bundle) {
  Rational total;
  for (ItemId e : bundle) total += row[e];
  return total;
}

Rational bundleSize(const Instance& instance, AgentId agent, const Bundle& bundle) {
  if (agent >= instance.agentCount())
    throw ContractViolationError("agent index " + std::to_string(agent) + " out of range");
  for (ItemId e : bundle)
    if (e >= instance.itemCount())
      throw ContractViolationError("item index " + std::to_string(e) + " out of range");
  return bundleSize(instance.row(agent), bundle);
}

bool isIdo(const Instance& instance) {
  for (std::size_t i = 0; i < instance.agentCount(); ++i) {
    const auto row = instance.row(i);
    for (std::size_t j = 1; j < row.size(); ++j)
      if (row[j] > row[j - 1]) return false;
  }
  return true;
}

Bundle makeBundle(std::vector<ItemId> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

BinPartition makeBinPartition(std::span<const Rational> row, std::vector<Bundle> bins) {
  BinPartition out;
  out.totals.reserve(bins.size());
  for (auto& bin : bins) {
    std::sort(bin.begin(), bin.end());
    out.totals.push_back(bundleSize(row, bin));
  }
  out.bins = std::move(bins);
  return out;
}

bool isPartitionOf(const std::vector<Bundle>& parts, const Bundle& parent, std::size_t itemCount) {
  std::vector<char> seen(itemCount, 0);
  std::size_t count = 0;
  for (const auto& part : parts) {
    for (ItemId e : part) {
      if (e >= itemCount || seen[e]) return false;
      seen[e] = 1;
      ++count;
    }
  }
  if (count != parent.size()) return false;
  return std::all_of(parent.begin(), parent.end(),
                     [&](ItemId e) { return e < itemCount && seen[e]; });
}

bool isValidAllocation(const Allocation& allocation, std::size_t agentCount,
                       std::size_t itemCount) {
  if (allocation.bundles.size() != agentCount) return false;
  return isPartitionOf(allocation.bundles, allItems(itemCount), itemCount);
}

void requireValidAllocation(const Allocation& allocation, std::size_t agentCount,
                            std::size_t itemCount) {
  if (!isValidAllocation(allocation, agentCount, itemCount))
    throw InvalidAllocationError("allocation is not a partition of " + std::to_string(itemCount) +
                                 " items into " + std::to_string(agentCount) + " bundles");
}

Bundle allItems(std::size_t count) {
  Bundle all(count);
  std::iota(all.begin(), all.end(), ItemId{0});
  return all;
}

}  // namespace binmms
