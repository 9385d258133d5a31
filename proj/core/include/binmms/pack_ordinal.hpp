#ifndef BINMMS_PACK_ORDINAL_HPP
#define BINMMS_PACK_ORDINAL_HPP

#include <optional>
#include <span>
#include <vector>

#include "binmms/ido.hpp"
#include "binmms/model.hpp"
#include "binmms/valuation.hpp"

namespace binmms {

/// One round of the bag loop.
struct BagRound {
  std::size_t column = 0;
  std::vector<AgentId> agentsBefore;  // remaining agents when the round starts, ascending
  std::vector<ItemId> added;          // items in the order they entered the bag
  std::size_t initCount = 0;          // leading entries of `added` placed by bag initialization
  std::optional<AgentId> candidate;   // a_k when the loop ended
  AgentId owner = 0;
  std::vector<ItemId> unallocatedAfter;
};

struct PackOrdinalRun {
  Allocation allocation;
  std::vector<BagRound> rounds;
  /// s_i(M) / n per agent.
  std::vector<Rational> share;
};

/// Bag initialization and filling over the stride columns j, j+n, j+2n, ...
/// Throws ContractViolationError on non-IDO input and InternalInvariantError
/// if items remain after the last round.
PackOrdinalRun runPackOrdinal(const Instance& idoInstance);

/// Trace checks on an IDO instance and its run.
bool checkLastItemShare(const Instance& idoInstance, const PackOrdinalRun& run);
bool checkEarlierBundleShare(const Instance& idoInstance, const PackOrdinalRun& run);
bool checkAllAllocated(const Instance& idoInstance, const PackOrdinalRun& run);

struct HSplit {
  std::size_t k = 0;
  /// Bundle items among the 2k smallest of the agent's large/medium items.
  std::vector<ItemId> Hstar;
  /// The bundle's other large/medium items.
  std::vector<ItemId> Hprime;
};

/// k = maxDisjointPairs over every item of `row` above 1/3; ties in size
/// count the larger id as smaller.
HSplit splitH(std::span<const Rational> row, const Bundle& bundle);

/// floor(4/3 kappa + 4/3).
std::size_t packOrdinalBound(std::size_t kappa);

struct PackConstruction {
  BinPartition bins;
  std::size_t stepABins = 0;
  bool pairingFallback = false;
  /// Bins above 1 when the final removal step begins.
  std::size_t overfull = 0;
};

/// Packs `bundle` into at most packOrdinalBound(kappa) bins of total <= 1.
/// Throws LemmaViolationError or TheoremViolationError when the counting fails.
PackConstruction packConstruct(std::span<const Rational> row, const Bundle& bundle,
                               std::size_t kappa);

struct PackOrdinalSolution {
  Allocation allocation;
  std::vector<BinPartition> witnesses;  // original sizes and ids
  std::vector<MmsCertificate> certificates;
  IdoReduction ido;
  PackOrdinalRun idoRun;
  std::vector<PackConstruction> constructions;  // IDO view
};

PackOrdinalSolution solvePackOrdinal(const Instance& instance,
                                     const std::vector<MmsCertificate>* certificates = nullptr,
                                     const SearchLimits& limits = {});

}  // namespace binmms

#endif  // BINMMS_PACK_ORDINAL_HPP
