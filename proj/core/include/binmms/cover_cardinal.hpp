#ifndef BINMMS_COVER_CARDINAL_HPP
#define BINMMS_COVER_CARDINAL_HPP

#include <optional>
#include <span>
#include <vector>

#include "binmms/ido.hpp"
#include "binmms/matching.hpp"
#include "binmms/mms.hpp"
#include "binmms/model.hpp"
#include "binmms/valuation.hpp"

namespace binmms {

/// Boustrophedon layout: column j holds the j-th, (2w-j+1)-th, (2w+j)-th,
/// (4w-j+1)-th, ... items of the ordered input (1-based).
struct Arrangement {
  std::size_t width = 0;
  std::vector<std::vector<ItemId>> columns;
};

/// `orderedItems` must already be in the common size order. Throws
/// ContractViolationError when width == 0.
Arrangement buildArrangement(std::span<const ItemId> orderedItems, std::size_t width);

/// Partition, balance (lengths differ by at most one) and boustrophedon
/// placement of `orderedItems` in `arrangement`.
bool arrangementIsValid(const Arrangement& arrangement, std::span<const ItemId> orderedItems);

/// The refined MMS partition summarized as solo large/medium items (F) and
/// paired mediums (H), both in the agent's rescaled sizes.
struct RefinedFH {
  std::vector<ItemId> F;
  /// Sorted by scaled size descending, ties by smaller id.
  std::vector<ItemId> H;
  std::size_t pairedGroups = 0;
};

/// Runs the medium-swap refinement to its fixed point: H is the 2p smallest
/// mediums, p the number of groups holding two mediums. Throws
/// InvalidWitnessError if a group holds more than one large, more than two
/// mediums, a large with a medium, or does not sum to 1; throws
/// LemmaViolationError if |F| + |H|/2 > kappa * n or pair totals break.
RefinedFH refinedFH(std::span<const Rational> scaledSizes, const std::vector<Bundle>& groups,
                    std::size_t kappa, std::size_t agentCount);

/// h_r + h_{r'} <= 1 whenever r + r' >= |H| + 1 (1-based ranks in H's order).
bool satisfiesPairBound(std::span<const Rational> scaledSizes, const std::vector<ItemId>& H);

/// At most `kappa` bins, each total <= 1: F items alone, H paired largest
/// with smallest, optionally setting aside the one or two largest H items.
/// Returns nullopt when none of the three layouts fits.
std::optional<std::vector<Bundle>> tryPackColumn(std::span<const Rational> scaledSizes,
                                                 const std::vector<ItemId>& columnF,
                                                 const std::vector<ItemId>& columnH,
                                                 std::size_t kappa);
/// As tryPackColumn, but throws LemmaViolationError on failure.
std::vector<Bundle> packColumn(std::span<const Rational> scaledSizes,
                               const std::vector<ItemId>& columnF,
                               const std::vector<ItemId>& columnH, std::size_t kappa);

/// tryPackColumn when it succeeds; otherwise exactly kappa bins (kappa > 0)
/// filled largest item first onto the lightest bin, totals possibly above 1.
std::vector<Bundle> foldColumn(std::span<const Rational> scaledSizes,
                               const std::vector<ItemId>& columnF,
                               const std::vector<ItemId>& columnH, std::size_t kappa);

/// Per-agent input: MMS value plus rescaled sizes and the exact-cover groups.
struct AgentCoverInput {
  std::size_t kappa = 0;
  std::vector<Rational> scaledSizes;
  std::vector<Bundle> groups;
};

/// A part offered by the divider; `bins` totals are in the divider's scaled sizes.
struct PartProposal {
  Bundle items;
  BinPartition bins;
};

/// Splits the remaining items into `arrangement.width` parts: column j's
/// large/medium items (divider's view) packed by packColumn, padded to kappa
/// bins, then topped up to 2/3 with the largest unassigned small items. With
/// width 1 the single part also absorbs every unused item. Throws
/// LemmaViolationError when the small items run out.
std::vector<PartProposal> createParts(const AgentCoverInput& divider, const RefinedFH& refined,
                                      std::span<const ItemId> remainingItems,
                                      const Arrangement& arrangement);

enum class EdgeMode { Constructive, Exact };

/// Bins certifying that `agent` accepts `part`: kappa bins each >= 2/3 in
/// scaled sizes, leftovers appended to the last bin. nullopt when rejected.
std::optional<std::vector<Bundle>> acceptPart(const AgentCoverInput& agent,
                                              const RefinedFH& refined, const Bundle& part,
                                              EdgeMode mode, const SearchLimits& limits = {});

/// Whether `agent` accepts `part` (kappa == 0 always accepts).
bool edgePredicate(const AgentCoverInput& agent, const RefinedFH& refined, const Bundle& part,
                   EdgeMode mode, const SearchLimits& limits = {});

struct CoverCardinalOptions {
  EdgeMode edgeMode = EdgeMode::Constructive;
  SearchLimits limits;
};

struct CoverCardinalRound {
  AgentId divider = 0;
  std::vector<AgentId> agents;  // remaining agents, ascending; graph vertex a is agents[a]
  std::vector<ItemId> remainingItems;
  /// Remaining items in the divider's scaled size order; the arrangement is built over this.
  std::vector<ItemId> order;
  Arrangement arrangement;
  std::vector<PartProposal> parts;
  BipartiteGraph graph{0, 0};
  Matching matching;
};

struct CoverCardinalResult {
  Allocation allocation;
  /// Per agent: kappa bins (a single throwaway bin for kappa == 0 with a
  /// non-empty bundle), totals in the instance's own sizes.
  std::vector<BinPartition> witnesses;
  std::vector<RefinedFH> refined;
  std::vector<CoverCardinalRound> rounds;
};

/// The divider/envy-free-matching loop on an IDO instance. Throws
/// AlgorithmStuckError if a round matches nobody.
CoverCardinalResult runCoverCardinal(const Instance& idoInstance,
                                     std::span<const AgentCoverInput> agents,
                                     const CoverCardinalOptions& options = {});

/// Full pipeline on an arbitrary instance: IDO reduction, exact MMS and
/// rescaling per agent (or the supplied certificates, in original item ids),
/// the loop above, and the lift back to original items.
struct CoverCardinalSolution {
  Allocation allocation;
  std::vector<BinPartition> witnesses;  // original sizes and item ids
  std::vector<MmsCertificate> certificates;  // original item ids
  IdoReduction ido;
  CoverCardinalResult idoRun;
};

CoverCardinalSolution solveCoverCardinal(const Instance& instance,
                                         const std::vector<MmsCertificate>* certificates = nullptr,
                                         const CoverCardinalOptions& options = {});

}  // namespace binmms

#endif  // BINMMS_COVER_CARDINAL_HPP
