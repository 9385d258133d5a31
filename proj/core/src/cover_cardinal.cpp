#include "binmms/cover_cardinal.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "binmms/errors.hpp"

namespace binmms {

namespace {

const Rational& twoThirds() {
  static const Rational value(2, 3);
  return value;
}

bool largeOrMedium(std::span<const Rational> scaled, ItemId e) {
  return isLargeOrMedium(scaled[e], ClassScheme::CoverCardinal);
}

void sortBySizeDesc(std::span<const Rational> scaled, std::vector<ItemId>& items) {
  std::sort(items.begin(), items.end(), [&](ItemId a, ItemId b) {
    if (scaled[a] != scaled[b]) return scaled[a] > scaled[b];
    return a < b;
  });
}

std::vector<char> membership(const std::vector<ItemId>& items, std::size_t m) {
  std::vector<char> in(m, 0);
  for (ItemId e : items) in[e] = 1;
  return in;
}

// Tops every bin up to 2/3 from the front of `pool`. Returns false if the pool runs dry.
bool fillToTwoThirds(std::span<const Rational> scaled, std::vector<Bundle>& bins,
                     std::deque<ItemId>& pool) {
  for (auto& bin : bins) {
    Rational total = bundleSize(scaled, bin);
    while (total < twoThirds()) {
      if (pool.empty()) return false;
      total += scaled[pool.front()];
      bin.push_back(pool.front());
      pool.pop_front();
    }
  }
  return true;
}

}  // namespace

Arrangement buildArrangement(std::span<const ItemId> orderedItems, std::size_t width) {
  if (width == 0) throw ContractViolationError("arrangement width must be positive");
  Arrangement out;
  out.width = width;
  out.columns.assign(width, {});
  for (std::size_t p = 0; p < orderedItems.size(); ++p) {
    const std::size_t block = p / width;
    const std::size_t offset = p % width;
    const std::size_t column = (block % 2 == 0) ? offset : width - 1 - offset;
    out.columns[column].push_back(orderedItems[p]);
  }
  return out;
}

bool arrangementIsValid(const Arrangement& arrangement, std::span<const ItemId> orderedItems) {
  const std::size_t w = arrangement.width;
  if (w == 0 || arrangement.columns.size() != w) return false;
  std::size_t shortest = orderedItems.size();
  std::size_t longest = 0;
  std::size_t placed = 0;
  for (std::size_t j = 1; j <= w; ++j) {
    const auto& column = arrangement.columns[j - 1];
    std::size_t expected = 0;
    for (std::size_t b = 0;; ++b) {
      // 1-based rank held by column j in block b.
      const std::size_t rank = (b % 2 == 0) ? b * w + j : (b + 1) * w - j + 1;
      if (rank > orderedItems.size()) break;
      if (expected >= column.size() || column[expected] != orderedItems[rank - 1]) return false;
      ++expected;
    }
    if (expected != column.size()) return false;
    placed += column.size();
    shortest = std::min(shortest, column.size());
    longest = std::max(longest, column.size());
  }
  return placed == orderedItems.size() && longest - shortest <= 1;
}

RefinedFH refinedFH(std::span<const Rational> scaledSizes, const std::vector<Bundle>& groups,
                    std::size_t kappa, std::size_t agentCount) {
  const Rational one(1);
  std::vector<ItemId> larges;
  std::vector<ItemId> mediums;
  std::size_t paired = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (bundleSize(scaledSizes, groups[g]) != one)
      throw InvalidWitnessError("scaled group " + std::to_string(g) + " does not sum to 1");
    std::size_t l = 0;
    std::size_t md = 0;
    for (ItemId e : groups[g]) {
      switch (classifyItem(scaledSizes[e], ClassScheme::CoverCardinal)) {
        case SizeClass::Large: ++l; larges.push_back(e); break;
        case SizeClass::Medium: ++md; mediums.push_back(e); break;
        case SizeClass::Small: break;
      }
    }
    if (l > 1 || md > 2 || (l == 1 && md > 0))
      throw InvalidWitnessError("scaled group " + std::to_string(g) +
                                " holds more large/medium items than one bin allows");
    if (md == 2) ++paired;
  }

  // Fixed point of the swap: paired mediums are never larger than solo ones.
  sortBySizeDesc(scaledSizes, mediums);
  RefinedFH out;
  out.pairedGroups = paired;
  const std::size_t solo = mediums.size() - 2 * paired;
  out.F = larges;
  out.F.insert(out.F.end(), mediums.begin(), mediums.begin() + static_cast<std::ptrdiff_t>(solo));
  std::sort(out.F.begin(), out.F.end());
  out.H.assign(mediums.begin() + static_cast<std::ptrdiff_t>(solo), mediums.end());

  if (out.F.size() * 2 + out.H.size() > 2 * kappa * agentCount)
    throw LemmaViolationError("|F| + |H|/2 exceeds kappa * n");
  if (!satisfiesPairBound(scaledSizes, out.H))
    throw LemmaViolationError("paired mediums violate the pair bound");
  return out;
}

bool satisfiesPairBound(std::span<const Rational> scaledSizes, const std::vector<ItemId>& H) {
  const Rational one(1);
  for (std::size_t r = 0; r < H.size(); ++r)
    if (scaledSizes[H[r]] + scaledSizes[H[H.size() - 1 - r]] > one) return false;
  return true;
}

std::optional<std::vector<Bundle>> tryPackColumn(std::span<const Rational> scaledSizes,
                                                 const std::vector<ItemId>& columnF,
                                                 const std::vector<ItemId>& columnH,
                                                 std::size_t kappa) {
  const Rational one(1);
  std::vector<ItemId> h = columnH;
  sortBySizeDesc(scaledSizes, h);
  for (std::size_t aside = 0; aside <= 2 && aside <= h.size(); ++aside) {
    const std::size_t rest = h.size() - aside;
    const std::size_t binCount = columnF.size() + aside + (rest + 1) / 2;
    if (binCount > kappa) continue;
    std::vector<Bundle> bins;
    bins.reserve(binCount);
    for (ItemId e : columnF) bins.push_back({e});
    for (std::size_t q = 0; q < aside; ++q) bins.push_back({h[q]});
    bool fits = true;
    for (std::size_t q = 0; q < rest / 2; ++q) {
      const ItemId big = h[aside + q];
      const ItemId small = h[h.size() - 1 - q];
      if (scaledSizes[big] + scaledSizes[small] > one) {
        fits = false;
        break;
      }
      bins.push_back({big, small});
    }
    if (!fits) continue;
    if (rest % 2 == 1) bins.push_back({h[aside + rest / 2]});
    return bins;
  }

  // Fewest bins overall: items above 1/3 fit at most two per bin, so the
  // greedy largest-with-smallest pairing is optimal.
  std::vector<ItemId> all = columnF;
  all.insert(all.end(), columnH.begin(), columnH.end());
  sortBySizeDesc(scaledSizes, all);
  std::vector<Bundle> bins;
  std::size_t lo = 0;
  std::size_t hi = all.size();
  while (lo < hi) {
    if (hi - lo >= 2 && scaledSizes[all[lo]] + scaledSizes[all[hi - 1]] <= one) {
      bins.push_back({all[lo], all[hi - 1]});
      --hi;
    } else {
      bins.push_back({all[lo]});
    }
    ++lo;
  }
  if (bins.size() <= kappa) return bins;
  return std::nullopt;
}

std::vector<Bundle> foldColumn(std::span<const Rational> scaledSizes,
                               const std::vector<ItemId>& columnF,
                               const std::vector<ItemId>& columnH, std::size_t kappa) {
  if (auto bins = tryPackColumn(scaledSizes, columnF, columnH, kappa)) return *std::move(bins);
  std::vector<ItemId> all = columnF;
  all.insert(all.end(), columnH.begin(), columnH.end());
  sortBySizeDesc(scaledSizes, all);
  std::vector<Bundle> bins(kappa);
  std::vector<Rational> totals(kappa, Rational(0));
  // Largest first onto the lightest bin.
  for (ItemId e : all) {
    const auto lightest = static_cast<std::size_t>(
        std::min_element(totals.begin(), totals.end()) - totals.begin());
    bins[lightest].push_back(e);
    totals[lightest] += scaledSizes[e];
  }
  return bins;
}

std::vector<Bundle> packColumn(std::span<const Rational> scaledSizes,
                               const std::vector<ItemId>& columnF,
                               const std::vector<ItemId>& columnH, std::size_t kappa) {
  auto bins = tryPackColumn(scaledSizes, columnF, columnH, kappa);
  if (!bins)
    throw LemmaViolationError("column with " + std::to_string(columnF.size()) + " F and " +
                              std::to_string(columnH.size()) +
                              " H items does not fit in kappa = " + std::to_string(kappa) +
                              " bins");
  return *std::move(bins);
}

std::vector<PartProposal> createParts(const AgentCoverInput& divider, const RefinedFH& refined,
                                      std::span<const ItemId> remainingItems,
                                      const Arrangement& arrangement) {
  const auto scaled = std::span<const Rational>(divider.scaledSizes);
  const std::size_t kappa = divider.kappa;
  std::vector<PartProposal> parts(arrangement.width);

  if (kappa == 0) {
    for (std::size_t j = 0; j < arrangement.width; ++j)
      parts[j].items = makeBundle(arrangement.columns[j]);
    return parts;
  }

  const auto inF = membership(refined.F, scaled.size());
  const auto inH = membership(refined.H, scaled.size());
  std::vector<ItemId> smalls;
  for (ItemId e : remainingItems)
    if (!largeOrMedium(scaled, e)) smalls.push_back(e);
  sortBySizeDesc(scaled, smalls);
  std::deque<ItemId> pool(smalls.begin(), smalls.end());

  std::vector<std::vector<Bundle>> columnBins(arrangement.width);
  for (std::size_t j = 0; j < arrangement.width; ++j) {
    std::vector<ItemId> colF;
    std::vector<ItemId> colH;
    for (ItemId e : arrangement.columns[j]) {
      if (inF[e]) colF.push_back(e);
      else if (inH[e]) colH.push_back(e);
    }
    columnBins[j] = foldColumn(scaled, colF, colH, kappa);
    columnBins[j].resize(kappa);
  }
  for (std::size_t j = 0; j < arrangement.width; ++j)
    if (!fillToTwoThirds(scaled, columnBins[j], pool))
      throw LemmaViolationError("small items exhausted while building part " + std::to_string(j));
  if (arrangement.width == 1)
    for (ItemId e : pool) columnBins[0].back().push_back(e);

  for (std::size_t j = 0; j < arrangement.width; ++j) {
    std::vector<ItemId> items;
    for (const auto& bin : columnBins[j]) items.insert(items.end(), bin.begin(), bin.end());
    parts[j].items = makeBundle(std::move(items));
    parts[j].bins = makeBinPartition(scaled, std::move(columnBins[j]));
  }
  return parts;
}

std::optional<std::vector<Bundle>> acceptPart(const AgentCoverInput& agent,
                                              const RefinedFH& refined, const Bundle& part,
                                              EdgeMode mode, const SearchLimits& limits) {
  const auto scaled = std::span<const Rational>(agent.scaledSizes);
  const std::size_t kappa = agent.kappa;
  if (kappa == 0) {
    if (part.empty()) return std::vector<Bundle>{};
    return std::vector<Bundle>{part};
  }
  if (bundleSize(scaled, part) < twoThirds() * Rational(static_cast<std::int64_t>(kappa)))
    return std::nullopt;

  std::vector<Bundle> bins;
  if (mode == EdgeMode::Exact) {
    CoverResult cover = coverAtThreshold(scaled, part, twoThirds(), limits);
    if (cover.value < kappa) return std::nullopt;
    bins = std::move(cover.witness.bins);
    for (std::size_t b = kappa; b < bins.size(); ++b)
      bins[kappa - 1].insert(bins[kappa - 1].end(), bins[b].begin(), bins[b].end());
    bins.resize(kappa);
    return bins;
  }

  const auto inF = membership(refined.F, scaled.size());
  const auto inH = membership(refined.H, scaled.size());
  std::vector<ItemId> colF;
  std::vector<ItemId> colH;
  std::vector<ItemId> smalls;
  for (ItemId e : part) {
    if (inF[e]) colF.push_back(e);
    else if (inH[e]) colH.push_back(e);
    else smalls.push_back(e);
  }
  bins = foldColumn(scaled, colF, colH, kappa);
  bins.resize(kappa);
  sortBySizeDesc(scaled, smalls);
  std::deque<ItemId> pool(smalls.begin(), smalls.end());
  if (!fillToTwoThirds(scaled, bins, pool)) return std::nullopt;
  for (ItemId e : pool) bins.back().push_back(e);
  return bins;
}

bool edgePredicate(const AgentCoverInput& agent, const RefinedFH& refined, const Bundle& part,
                   EdgeMode mode, const SearchLimits& limits) {
  return acceptPart(agent, refined, part, mode, limits).has_value();
}

namespace {

void validateInputs(const Instance& ido, std::span<const AgentCoverInput> agents) {
  if (!isIdo(ido)) throw ContractViolationError("cover-cardinal requires an IDO instance");
  const std::size_t n = ido.agentCount();
  const std::size_t m = ido.itemCount();
  if (agents.size() != n)
    throw ContractViolationError("expected one cover input per agent");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = agents[i];
    if (a.scaledSizes.size() != m)
      throw ContractViolationError("scaled sizes of agent " + std::to_string(i) +
                                   " have the wrong length");
    if (a.kappa == 0) continue;
    if (a.groups.size() != n * a.kappa || !isPartitionOf(a.groups, allItems(m), m))
      throw InvalidWitnessError("agent " + std::to_string(i) +
                                " needs n * kappa groups partitioning the items");
    for (std::size_t e = 0; e < m; ++e)
      if (a.scaledSizes[e] > ido.size(i, e) || !a.scaledSizes[e].isPositive())
        throw InvalidWitnessError("scaled size exceeds the original size");
  }
}

}  // namespace

CoverCardinalResult runCoverCardinal(const Instance& idoInstance,
                                     std::span<const AgentCoverInput> agents,
                                     const CoverCardinalOptions& options) {
  validateInputs(idoInstance, agents);
  const std::size_t n = idoInstance.agentCount();
  const std::size_t m = idoInstance.itemCount();

  CoverCardinalResult result;
  result.refined.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    if (agents[i].kappa > 0)
      result.refined[i] = refinedFH(agents[i].scaledSizes, agents[i].groups, agents[i].kappa, n);

  std::vector<Bundle> bundles(n);
  std::vector<std::vector<Bundle>> bins(n);
  std::vector<AgentId> remainingAgents(n);
  for (std::size_t i = 0; i < n; ++i) remainingAgents[i] = i;
  std::vector<ItemId> remainingItems = allItems(m);
  std::vector<AgentId> lastMatched;

  while (!remainingAgents.empty()) {
    CoverCardinalRound round;
    const std::size_t width = remainingAgents.size();
    round.agents = remainingAgents;
    round.remainingItems = remainingItems;

    // Divider: most large/medium remaining items among agents with kappa > 0.
    std::optional<AgentId> divider;
    std::size_t bestCount = 0;
    for (AgentId a : remainingAgents) {
      if (agents[a].kappa == 0) continue;
      const auto count = static_cast<std::size_t>(
          std::count_if(remainingItems.begin(), remainingItems.end(),
                        [&](ItemId e) { return largeOrMedium(agents[a].scaledSizes, e); }));
      if (!divider || count > bestCount) {
        divider = a;
        bestCount = count;
      }
    }
    round.divider = divider.value_or(remainingAgents.front());
    round.order = remainingItems;
    if (agents[round.divider].kappa > 0) sortBySizeDesc(agents[round.divider].scaledSizes, round.order);
    round.arrangement = buildArrangement(round.order, width);
    round.parts = createParts(agents[round.divider], result.refined[round.divider],
                              remainingItems, round.arrangement);

    round.graph = BipartiteGraph(width, width);
    std::vector<std::vector<std::optional<std::vector<Bundle>>>> offers(
        width, std::vector<std::optional<std::vector<Bundle>>>(width));
    for (std::size_t a = 0; a < width; ++a) {
      const AgentId agent = remainingAgents[a];
      for (std::size_t p = 0; p < width; ++p) {
        if (agent == round.divider) {
          if (agents[agent].kappa == 0)
            offers[a][p] = acceptPart(agents[agent], result.refined[agent], round.parts[p].items,
                                      options.edgeMode, options.limits);
          else
            offers[a][p] = round.parts[p].bins.bins;
        } else {
          offers[a][p] = acceptPart(agents[agent], result.refined[agent], round.parts[p].items,
                                    options.edgeMode, options.limits);
        }
        if (offers[a][p]) round.graph.addEdge(a, p);
      }
    }

    round.matching = maxCardinalityEnvyFreeMatching(round.graph);
    if (round.matching.size() == 0)
      throw AlgorithmStuckError("no agent matched in a round with " + std::to_string(width) +
                                " agents");

    std::vector<char> itemTaken(m, 0);
    std::vector<char> agentDone(n, 0);
    lastMatched.clear();
    for (const auto& [a, p] : round.matching.pairs) {
      const AgentId agent = remainingAgents[a];
      bundles[agent] = round.parts[p].items;
      bins[agent] = *offers[a][p];
      for (ItemId e : round.parts[p].items) itemTaken[e] = 1;
      agentDone[agent] = 1;
      lastMatched.push_back(agent);
    }
    if (!agentDone[round.divider])
      throw InternalInvariantError("divider left unmatched in her own round");

    std::erase_if(remainingAgents, [&](AgentId a) { return agentDone[a] != 0; });
    std::erase_if(remainingItems, [&](ItemId e) { return itemTaken[e] != 0; });
    result.rounds.push_back(std::move(round));
  }

  if (!remainingItems.empty()) {
    const AgentId sink = *std::min_element(lastMatched.begin(), lastMatched.end());
    bundles[sink].insert(bundles[sink].end(), remainingItems.begin(), remainingItems.end());
    bundles[sink] = makeBundle(std::move(bundles[sink]));
    if (bins[sink].empty()) bins[sink].push_back({});
    bins[sink].back().insert(bins[sink].back().end(), remainingItems.begin(),
                             remainingItems.end());
  }

  result.allocation.bundles = std::move(bundles);
  result.witnesses.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (agents[i].kappa == 0) {
      std::vector<Bundle> throwaway;
      if (!result.allocation.bundles[i].empty()) throwaway.push_back(result.allocation.bundles[i]);
      bins[i] = std::move(throwaway);
    }
    result.witnesses[i] = makeBinPartition(idoInstance.row(i), std::move(bins[i]));
  }
  requireValidAllocation(result.allocation, n, m);
  return result;
}

CoverCardinalSolution solveCoverCardinal(const Instance& instance,
                                         const std::vector<MmsCertificate>* certificates,
                                         const CoverCardinalOptions& options) {
  const std::size_t n = instance.agentCount();
  if (certificates && certificates->size() != n)
    throw ContractViolationError("expected one certificate per agent");

  CoverCardinalSolution out;
  out.ido = toIdo(instance);
  const Instance& ido = out.ido.idoInstance;
  std::vector<AgentCoverInput> inputs(n);
  out.certificates.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const MmsCertificate cert = certificates ? certificateToIdo((*certificates)[i], out.ido, i)
                                             : mmsCover(ido, i, options.limits);
    ScaledView view = rescaleExactCover(ido, i, cert, options.limits);
    inputs[i] = AgentCoverInput{cert.kappa, std::move(view.sizes), std::move(view.groups)};
    out.certificates[i] = certificateFromIdo(cert, out.ido, i);
  }

  out.idoRun = runCoverCardinal(ido, inputs, options);
  LiftedAllocation lifted = liftAllocationCover(instance, out.ido, out.idoRun.allocation);
  out.allocation = std::move(lifted.allocation);
  out.witnesses.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.witnesses[i] =
        makeBinPartition(instance.row(i), mapBins(out.idoRun.witnesses[i].bins, lifted.idoToOriginal));
  return out;
}

}  // namespace binmms
