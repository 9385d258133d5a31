#include "binmms/mms.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "binmms/errors.hpp"

namespace binmms {

namespace {

void requireMmsCaps(const Instance& instance, AgentId agent, const SearchLimits& limits) {
  if (agent >= instance.agentCount())
    throw ContractViolationError("agent index " + std::to_string(agent) + " out of range");
  if (instance.itemCount() > limits.maxMmsItems || instance.agentCount() > limits.maxMmsAgents)
    throw CapacityExceededError(
        "exact MMS search limited to " + std::to_string(limits.maxMmsItems) + " items and " +
        std::to_string(limits.maxMmsAgents) + " agents (instance has " +
        std::to_string(instance.itemCount()) + " items, " +
        std::to_string(instance.agentCount()) + " agents)");
}

// Enumerates item-to-part assignments as restricted growth strings in
// lexicographic order. `Objective` decides pruning and leaf scoring.
template <typename Objective>
class PartitionSearch {
 public:
  PartitionSearch(std::size_t items, std::size_t parts, const std::vector<std::uint8_t>& table,
                  Objective objective)
      : m_(items), n_(parts), table_(table), obj_(objective), blocks_(parts, 0), assign_(items) {}

  void run() { descend(0, 0); }

  [[nodiscard]] int best() const { return best_; }
  [[nodiscard]] const std::vector<std::size_t>& bestAssignment() const { return bestAssign_; }

 private:
  void descend(std::size_t e, std::size_t used) {
    if (done_) return;
    if (e == m_) {
      const int value = obj_.score(blocks_, table_);
      if (obj_.improves(value, best_)) {
        best_ = value;
        bestAssign_ = assign_;
        if (obj_.reachedBound(best_)) done_ = true;
      }
      return;
    }
    const std::size_t remaining = ((std::size_t{1} << m_) - 1) & ~((std::size_t{1} << e) - 1);
    if (!obj_.promising(blocks_, used, remaining, table_, best_)) return;
    const std::size_t limit = std::min(used + 1, n_);
    for (std::size_t b = 0; b < limit && !done_; ++b) {
      blocks_[b] |= std::size_t{1} << e;
      assign_[e] = b;
      descend(e + 1, std::max(used, b + 1));
      blocks_[b] &= ~(std::size_t{1} << e);
    }
  }

  std::size_t m_;
  std::size_t n_;
  const std::vector<std::uint8_t>& table_;
  Objective obj_;
  std::vector<std::size_t> blocks_;
  std::vector<std::size_t> assign_;
  std::vector<std::size_t> bestAssign_;
  int best_ = Objective::kInitial;
  bool done_ = false;
};

struct MaxMinCover {
  static constexpr int kInitial = -1;
  int upper;
  int score(const std::vector<std::size_t>& blocks, const std::vector<std::uint8_t>& t) const {
    int worst = std::numeric_limits<int>::max();
    for (std::size_t mask : blocks) worst = std::min<int>(worst, t[mask]);
    return worst;
  }
  static bool improves(int value, int best) { return value > best; }
  bool reachedBound(int best) const { return best >= upper; }
  // Every part may still absorb all remaining items; monotone values give an optimistic bound.
  static bool promising(const std::vector<std::size_t>& blocks, std::size_t, std::size_t remaining,
                        const std::vector<std::uint8_t>& t, int best) {
    int optimistic = std::numeric_limits<int>::max();
    for (std::size_t mask : blocks) optimistic = std::min<int>(optimistic, t[mask | remaining]);
    return optimistic > best;
  }
};

struct MinMaxPack {
  static constexpr int kInitial = std::numeric_limits<int>::max();
  int lower;
  int score(const std::vector<std::size_t>& blocks, const std::vector<std::uint8_t>& t) const {
    int worst = 0;
    for (std::size_t mask : blocks) worst = std::max<int>(worst, t[mask]);
    return worst;
  }
  static bool improves(int value, int best) { return value < best; }
  bool reachedBound(int best) const { return best <= lower; }
  static bool promising(const std::vector<std::size_t>& blocks, std::size_t, std::size_t,
                        const std::vector<std::uint8_t>& t, int best) {
    int current = 0;
    for (std::size_t mask : blocks) current = std::max<int>(current, t[mask]);
    return current < best;
  }
};

std::vector<Bundle> bundlesFromAssignment(const std::vector<std::size_t>& assign,
                                          std::size_t parts) {
  std::vector<Bundle> witness(parts);
  for (std::size_t e = 0; e < assign.size(); ++e) witness[assign[e]].push_back(e);
  return witness;
}

}  // namespace

MmsCertificate mmsCover(const Instance& instance, AgentId agent, const SearchLimits& limits) {
  requireMmsCaps(instance, agent, limits);
  const std::size_t n = instance.agentCount();
  const std::size_t m = instance.itemCount();
  const auto row = instance.row(agent);
  const Bundle items = allItems(m);
  const SubsetValueTable table = coverValuesForAllSubsets(row, items);
  const int upper = static_cast<int>((bundleSize(row, items) / Rational(static_cast<std::int64_t>(n))).floor());

  PartitionSearch search(m, n, table.values, MaxMinCover{upper});
  search.run();
  MmsCertificate cert;
  cert.model = Model::Covering;
  cert.kappa = static_cast<std::size_t>(search.best());
  cert.witness = bundlesFromAssignment(search.bestAssignment(), n);
  return cert;
}

MmsCertificate mmsPack(const Instance& instance, AgentId agent, const SearchLimits& limits) {
  requireMmsCaps(instance, agent, limits);
  const std::size_t n = instance.agentCount();
  const std::size_t m = instance.itemCount();
  const auto row = instance.row(agent);
  const Bundle items = allItems(m);
  const SubsetValueTable table = packCostsForAllSubsets(row, items);
  const int lower = static_cast<int>((bundleSize(row, items) / Rational(static_cast<std::int64_t>(n))).ceil());

  PartitionSearch search(m, n, table.values, MinMaxPack{std::max(lower, 1)});
  search.run();
  MmsCertificate cert;
  cert.model = Model::Packing;
  cert.kappa = static_cast<std::size_t>(search.best());
  cert.witness = bundlesFromAssignment(search.bestAssignment(), n);
  return cert;
}

std::vector<Rational> rescaleGroups(std::span<const Rational> row,
                                    const std::vector<Bundle>& groups) {
  std::vector<Rational> scaled(row.begin(), row.end());
  std::vector<char> seen(row.size(), 0);
  const Rational one(1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const Rational total = bundleSize(row, groups[g]);
    if (total < one)
      throw InvalidWitnessError("scaling group " + std::to_string(g) + " has total " +
                                total.str() + " < 1");
    for (ItemId e : groups[g]) {
      if (e >= row.size() || seen[e])
        throw InvalidWitnessError("scaling groups overlap or reference unknown items");
      seen[e] = 1;
      scaled[e] = row[e] / total;
    }
  }
  return scaled;
}

ScaledView rescaleExactCover(const Instance& instance, AgentId agent,
                             const MmsCertificate& certificate, const SearchLimits& limits) {
  if (agent >= instance.agentCount())
    throw ContractViolationError("agent index " + std::to_string(agent) + " out of range");
  const auto row = instance.row(agent);
  ScaledView view;
  if (certificate.kappa == 0) {
    view.sizes.assign(row.begin(), row.end());
    return view;
  }
  if (certificate.witness.size() != instance.agentCount() ||
      !isPartitionOf(certificate.witness, allItems(instance.itemCount()), instance.itemCount()))
    throw InvalidWitnessError("MMS witness is not an n-partition of the items");

  for (const Bundle& part : certificate.witness) {
    CoverResult cover = coverAtThreshold(row, part, Rational(1), limits);
    if (cover.value < certificate.kappa)
      throw InvalidWitnessError("witness part covers " + std::to_string(cover.value) +
                                " bins, fewer than kappa = " + std::to_string(certificate.kappa));
    auto& bins = cover.witness.bins;
    for (std::size_t b = certificate.kappa; b < bins.size(); ++b)
      bins[certificate.kappa - 1].insert(bins[certificate.kappa - 1].end(), bins[b].begin(),
                                         bins[b].end());
    bins.resize(certificate.kappa);
    for (auto& bin : bins) view.groups.push_back(makeBundle(std::move(bin)));
  }
  view.sizes = rescaleGroups(row, view.groups);
  return view;
}

}  // namespace binmms
