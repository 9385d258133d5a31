#ifndef BINMMS_IDO_HPP
#define BINMMS_IDO_HPP

#include <vector>

#include "binmms/model.hpp"

namespace binmms {

/// An instance with every agent's row sorted non-increasingly, plus the
/// per-agent map from sorted rank to original item id.
struct IdoReduction {
  Instance idoInstance;
  /// rankToItem[i][r] = original id of agent i's r-th largest item
  /// (ties broken by smaller original id).
  std::vector<std::vector<ItemId>> rankToItem;
};

IdoReduction toIdo(const Instance& instance);

/// A lifted allocation plus, per IDO item, the original item its owner took for it.
struct LiftedAllocation {
  Allocation allocation;
  std::vector<ItemId> idoToOriginal;
};

/// Goods direction: IDO items are visited in ascending index; the owner of
/// each takes her largest remaining original item (ties: smaller id). Every
/// agent's lifted sizes dominate her IDO sizes item by item.
LiftedAllocation liftAllocationCover(const Instance& original, const IdoReduction& ido,
                                     const Allocation& idoAllocation);

/// Chores direction: IDO items are visited in descending index; the owner of
/// each takes her smallest remaining original item (ties: smaller id). Every
/// agent's lifted sizes are dominated by her IDO sizes item by item.
LiftedAllocation liftAllocationPack(const Instance& original, const IdoReduction& ido,
                                    const Allocation& idoAllocation);

/// Re-expresses bins over IDO items as bins over the lifted original items.
std::vector<Bundle> mapBins(const std::vector<Bundle>& idoBins,
                            const std::vector<ItemId>& idoToOriginal);

/// Maps an agent's certificate between original ids and her IDO ranks.
MmsCertificate certificateToIdo(const MmsCertificate& certificate, const IdoReduction& ido,
                                AgentId agent);
MmsCertificate certificateFromIdo(const MmsCertificate& certificate, const IdoReduction& ido,
                                  AgentId agent);

}  // namespace binmms

#endif  // BINMMS_IDO_HPP
