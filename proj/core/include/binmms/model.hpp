#ifndef BINMMS_MODEL_HPP
#define BINMMS_MODEL_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "binmms/rational.hpp"

namespace binmms {

using AgentId = std::size_t;
using ItemId = std::size_t;

/// A set of item indices, kept sorted ascending without duplicates.
using Bundle = std::vector<ItemId>;

/// n agents, m items, agent-specific sizes in (0, 1]. Bin capacity is 1.
class Instance {
 public:
  Instance() = default;
  /// Throws InvalidSizeError on ragged rows, empty dimensions or sizes outside (0, 1].
  explicit Instance(std::vector<std::vector<Rational>> sizes);

  [[nodiscard]] std::size_t agentCount() const { return sizes_.size(); }
  [[nodiscard]] std::size_t itemCount() const { return sizes_.empty() ? 0 : sizes_.front().size(); }
  [[nodiscard]] const Rational& size(AgentId agent, ItemId item) const { return sizes_[agent][item]; }
  [[nodiscard]] std::span<const Rational> row(AgentId agent) const { return sizes_[agent]; }
  [[nodiscard]] const std::vector<std::vector<Rational>>& sizes() const { return sizes_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::vector<Rational>> sizes_;
};

/// n bundles, pairwise disjoint, whose union is the whole item set.
struct Allocation {
  std::vector<Bundle> bundles;
  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// A parent bundle split into bins, with each bin's total for one agent.
struct BinPartition {
  std::vector<Bundle> bins;
  std::vector<Rational> totals;
  friend bool operator==(const BinPartition&, const BinPartition&) = default;
};

enum class Model { Covering, Packing };

std::string_view toString(Model model);
Model parseModel(std::string_view text);

/// An agent's MMS value together with an n-partition of all items reaching it.
struct MmsCertificate {
  Model model = Model::Covering;
  std::size_t kappa = 0;
  std::vector<Bundle> witness;
};

enum class SizeClass { Large, Medium, Small };

/// CoverCardinal: Large s >= 2/3, Medium 1/3 < s < 2/3.
/// HalfThird:     Large s > 1/2,  Medium 1/3 < s <= 1/2.
enum class ClassScheme { CoverCardinal, HalfThird };

/// Throws InvalidSizeError when size is outside (0, 1].
SizeClass classifyItem(const Rational& size, ClassScheme scheme);
inline bool isLargeOrMedium(const Rational& size, ClassScheme scheme) {
  return classifyItem(size, scheme) != SizeClass::Small;
}

Rational bundleSize(std::span<const Rational> row, const Bundle& bundle);
/// Throws ContractViolationError on out-of-range indices.
Rational bundleSize(const Instance& instance, AgentId agent, const Bundle& bundle);

/// True iff every agent's row is non-increasing in item index.
bool isIdo(const Instance& instance);

/// Sorts and deduplicates.
Bundle makeBundle(std::vector<ItemId> items);

/// Builds a BinPartition whose totals are recomputed from `row`.
BinPartition makeBinPartition(std::span<const Rational> row, std::vector<Bundle> bins);

/// True iff `parts` are pairwise disjoint, in range and their union equals `parent`.
bool isPartitionOf(const std::vector<Bundle>& parts, const Bundle& parent, std::size_t itemCount);

/// True iff the allocation has `agentCount` bundles partitioning [0, itemCount).
bool isValidAllocation(const Allocation& allocation, std::size_t agentCount, std::size_t itemCount);
/// Throws InvalidAllocationError when !isValidAllocation.
void requireValidAllocation(const Allocation& allocation, std::size_t agentCount,
                            std::size_t itemCount);

/// Bundle {0, 1, ..., count-1}.
Bundle allItems(std::size_t count);

}  // namespace binmms

#endif  // BINMMS_MODEL_HPP
