#ifndef BINMMS_MMS_HPP
#define BINMMS_MMS_HPP

#include <span>
#include <vector>

#include "binmms/model.hpp"
#include "binmms/valuation.hpp"

namespace binmms {

/// Exact covering MMS of `agent`: the best worst-part covering value over all
/// n-partitions of the items. Among maximizers the witness whose
/// item-to-part assignment (parts numbered in order of first use) is
/// lexicographically smallest is returned.
/// Throws CapacityExceededError beyond limits.maxMmsItems / maxMmsAgents.
MmsCertificate mmsCover(const Instance& instance, AgentId agent, const SearchLimits& limits = {});

/// Exact packing MMS of `agent` (min over n-partitions of the worst part's
/// packing cost); same tie-breaking and caps as mmsCover.
MmsCertificate mmsPack(const Instance& instance, AgentId agent, const SearchLimits& limits = {});

/// One agent's sizes rescaled so that each scaling group sums to exactly 1.
struct ScaledView {
  std::vector<Rational> sizes;
  /// n * kappa groups partitioning the items; empty when kappa == 0.
  std::vector<Bundle> groups;
};

/// Divides every item by the total of its group. Groups must be disjoint and
/// each total at least 1 (InvalidWitnessError otherwise); items outside
/// every group keep their size.
std::vector<Rational> rescaleGroups(std::span<const Rational> row,
                                    const std::vector<Bundle>& groups);

/// Splits every witness part into kappa covering groups (extra covered bins
/// and leftovers merged into the last group) and rescales them to exact
/// cover. Throws InvalidWitnessError when a part covers fewer than kappa bins.
ScaledView rescaleExactCover(const Instance& instance, AgentId agent,
                             const MmsCertificate& certificate, const SearchLimits& limits = {});

}  // namespace binmms

#endif  // BINMMS_MMS_HPP
