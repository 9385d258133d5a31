#include "binmms/pack_ordinal.hpp"

#include <algorithm>
#include <string>

#include "binmms/errors.hpp"
#include "binmms/mms.hpp"

namespace binmms {

namespace {

bool isSmall(const Rational& size) {
  return classifyItem(size, ClassScheme::HalfThird) == SizeClass::Small;
}

}  // namespace

PackOrdinalRun runPackOrdinal(const Instance& idoInstance) {
  if (!isIdo(idoInstance)) throw ContractViolationError("pack-ordinal requires an IDO instance");
  const std::size_t n = idoInstance.agentCount();
  const std::size_t m = idoInstance.itemCount();

  PackOrdinalRun run;
  run.allocation.bundles.assign(n, {});
  run.share.reserve(n);
  for (AgentId i = 0; i < n; ++i)
    run.share.push_back(bundleSize(idoInstance.row(i), allItems(m)) /
                        Rational(static_cast<std::int64_t>(n)));

  std::vector<char> allocated(m, 0);
  std::vector<AgentId> remaining(n);
  for (AgentId i = 0; i < n; ++i) remaining[i] = i;
  std::size_t unallocated = m;

  // Largest unallocated index, or m when everything is gone.
  auto lastFree = [&]() -> std::size_t {
    for (std::size_t e = m; e-- > 0;)
      if (!allocated[e]) return e;
    return m;
  };

  for (std::size_t j = 0; j < n; ++j) {
    BagRound round;
    round.column = j;
    round.agentsBefore = remaining;
    std::vector<Rational> bagTotal(n, Rational(0));
    auto put = [&](ItemId e) {
      round.added.push_back(e);
      allocated[e] = 1;
      --unallocated;
      for (AgentId a : remaining) bagTotal[a] += idoInstance.size(a, e);
    };

    for (std::size_t t = j; t < m && !allocated[t]; t += n) {
      const auto qualifying = std::find_if(remaining.begin(), remaining.end(), [&](AgentId a) {
        return !isSmall(idoInstance.size(a, t));
      });
      if (qualifying == remaining.end()) break;
      round.candidate = *qualifying;
      put(t);
    }
    round.initCount = round.added.size();

    for (;;) {
      const std::size_t e = lastFree();
      if (e == m) break;
      const auto filler = std::find_if(remaining.begin(), remaining.end(), [&](AgentId a) {
        return bagTotal[a] <= run.share[a] && isSmall(idoInstance.size(a, e));
      });
      if (filler == remaining.end()) break;
      round.candidate = *filler;
      put(e);
    }

    round.owner = round.candidate.value_or(remaining.front());
    run.allocation.bundles[round.owner] = makeBundle(round.added);
    std::erase(remaining, round.owner);
    for (ItemId e = 0; e < m; ++e)
      if (!allocated[e]) round.unallocatedAfter.push_back(e);
    run.rounds.push_back(std::move(round));
  }

  if (unallocated != 0)
    throw InternalInvariantError(std::to_string(unallocated) + " items left after the last round");
  return run;
}

bool checkLastItemShare(const Instance& idoInstance, const PackOrdinalRun& run) {
  for (const auto& round : run.rounds) {
    if (round.added.empty()) continue;
    const ItemId last = round.added.back();
    const auto row = idoInstance.row(round.owner);
    if (!isSmall(row[last])) continue;
    Bundle rest(round.added.begin(), round.added.end() - 1);
    if (bundleSize(row, rest) > run.share[round.owner]) return false;
  }
  return true;
}

bool checkEarlierBundleShare(const Instance& idoInstance, const PackOrdinalRun& run) {
  for (const auto& round : run.rounds) {
    for (AgentId i : round.agentsBefore) {
      if (i == round.owner) continue;
      const auto row = idoInstance.row(i);
      const bool smallLeft = std::any_of(round.unallocatedAfter.begin(),
                                         round.unallocatedAfter.end(),
                                         [&](ItemId e) { return isSmall(row[e]); });
      if (smallLeft && bundleSize(row, makeBundle(round.added)) <= run.share[i]) return false;
    }
  }
  return true;
}

bool checkAllAllocated(const Instance& idoInstance, const PackOrdinalRun& run) {
  return isValidAllocation(run.allocation, idoInstance.agentCount(), idoInstance.itemCount()) &&
         (run.rounds.empty() || run.rounds.back().unallocatedAfter.empty());
}

HSplit splitH(std::span<const Rational> row, const Bundle& bundle) {
  std::vector<ItemId> H;
  for (ItemId e = 0; e < row.size(); ++e)
    if (!isSmall(row[e])) H.push_back(e);
  std::sort(H.begin(), H.end(), [&](ItemId a, ItemId b) {
    if (row[a] != row[b]) return row[a] > row[b];
    return a < b;
  });
  std::vector<Rational> sizes;
  sizes.reserve(H.size());
  for (ItemId e : H) sizes.push_back(row[e]);

  HSplit out;
  out.k = maxDisjointPairs(sizes);
  std::vector<char> star(row.size(), 0);
  for (std::size_t r = H.size() - 2 * out.k; r < H.size(); ++r) star[H[r]] = 1;
  for (ItemId e : bundle) {
    if (isSmall(row[e])) continue;
    (star[e] ? out.Hstar : out.Hprime).push_back(e);
  }
  return out;
}

std::size_t packOrdinalBound(std::size_t kappa) { return (4 * kappa + 4) / 3; }

namespace {

struct Bin {
  std::vector<ItemId> items;
  Rational total;
};

// Two-pointer pairing over sizes sorted descending: the largest left pairs
// with the smallest right when they fit, otherwise goes alone.
std::vector<Bundle> twoPointerPairs(std::span<const Rational> row, const std::vector<ItemId>& T) {
  std::vector<Bundle> bins;
  std::size_t lo = 0;
  std::size_t hi = T.size();
  while (lo < hi) {
    if (hi - lo >= 2 && row[T[lo]] + row[T[hi - 1]] <= Rational(1)) {
      bins.push_back({T[lo], T[hi - 1]});
      --hi;
    } else {
      bins.push_back({T[lo]});
    }
    ++lo;
  }
  return bins;
}

}  // namespace

PackConstruction packConstruct(std::span<const Rational> row, const Bundle& bundle,
                               std::size_t kappa) {
  const Rational one(1);
  const Rational twoThirds(2, 3);
  PackConstruction out;
  const HSplit split = splitH(row, bundle);

  // Step A.
  std::vector<Bundle> stepA;
  for (ItemId e : split.Hprime) stepA.push_back({e});
  std::vector<ItemId> T = split.Hstar;
  std::sort(T.begin(), T.end(), [&](ItemId a, ItemId b) {
    if (row[a] != row[b]) return row[a] > row[b];
    return a < b;
  });
  const std::size_t t = T.size();
  if (t > 0) {
    std::vector<Bundle> paired{{T[0]}};
    for (std::size_t lo = 1, hi = t - 1; lo <= hi; ++lo, --hi) {
      if (lo == hi) {
        paired.push_back({T[lo]});
        break;
      }
      if (row[T[lo]] + row[T[hi]] > one) {
        out.pairingFallback = true;
        break;
      }
      paired.push_back({T[lo], T[hi]});
    }
    if (out.pairingFallback) {
      paired = twoPointerPairs(row, T);
      if (paired.size() > t / 2 + 1)
        throw LemmaViolationError("fallback pairing used " + std::to_string(paired.size()) +
                                  " bins for " + std::to_string(t) + " items");
    }
    stepA.insert(stepA.end(), paired.begin(), paired.end());
  }
  out.stepABins = stepA.size();
  if (out.stepABins > kappa + 2)
    throw LemmaViolationError("large/medium items need " + std::to_string(out.stepABins) +
                              " bins, more than kappa + 2 = " + std::to_string(kappa + 2));

  std::vector<Bin> bins;
  for (auto& b : stepA) bins.push_back({b, bundleSize(row, b)});
  bins.resize(kappa + 2, Bin{{}, Rational(0)});

  std::vector<char> small(row.size(), 0);
  std::vector<ItemId> smalls;
  for (ItemId e : bundle)
    if (isSmall(row[e])) {
      smalls.push_back(e);
      small[e] = 1;
    }
  std::sort(smalls.begin(), smalls.end(), [&](ItemId a, ItemId b) {
    if (row[a] != row[b]) return row[a] < row[b];
    return a > b;
  });

  // Step B: ascending smalls, each bin until it first exceeds 1.
  std::size_t cursor = 0;
  for (ItemId e : smalls) {
    while (cursor < bins.size() && bins[cursor].total > one) ++cursor;
    if (cursor == bins.size()) bins.push_back({{}, Rational(0)});
    bins[cursor].items.push_back(e);
    bins[cursor].total += row[e];
  }

  auto largestSmall = [&](const Bin& bin) {
    auto best = bin.items.end();
    for (auto it = bin.items.begin(); it != bin.items.end(); ++it)
      if (small[*it] && (best == bin.items.end() || row[*it] > row[*best])) best = it;
    return best;
  };

  // Step C.
  for (;;) {
    auto receiver = std::find_if(bins.begin(), bins.end(),
                                 [&](const Bin& b) { return b.total <= twoThirds; });
    auto donor = std::find_if(bins.begin(), bins.end(), [&](const Bin& b) {
      return b.total > one && largestSmall(b) != b.items.end();
    });
    if (receiver == bins.end() || donor == bins.end()) break;
    auto it = largestSmall(*donor);
    const ItemId e = *it;
    donor->items.erase(it);
    donor->total -= row[e];
    receiver->items.push_back(e);
    receiver->total += row[e];
  }

  // Step D.
  std::vector<ItemId> removed;
  for (auto& bin : bins) {
    if (bin.total <= one) continue;
    ++out.overfull;
    auto it = largestSmall(bin);
    removed.push_back(*it);
    bin.total -= row[*it];
    bin.items.erase(it);
  }
  if (out.overfull > (kappa > 4 ? kappa - 4 : 0))
    throw LemmaViolationError(std::to_string(out.overfull) + " bins exceed 1 with kappa = " +
                              std::to_string(kappa));
  for (std::size_t q = 0; q < removed.size(); q += 3) {
    Bin extra{{}, Rational(0)};
    for (std::size_t r = q; r < std::min(q + 3, removed.size()); ++r) {
      extra.items.push_back(removed[r]);
      extra.total += row[removed[r]];
    }
    bins.push_back(std::move(extra));
  }

  std::vector<Bundle> finalBins;
  for (auto& bin : bins) {
    if (bin.items.empty()) continue;
    if (bin.total > one) throw TheoremViolationError("a packed bin exceeds capacity");
    finalBins.push_back(makeBundle(std::move(bin.items)));
  }
  if (finalBins.size() > packOrdinalBound(kappa))
    throw TheoremViolationError("packing uses " + std::to_string(finalBins.size()) +
                                " bins, bound " + std::to_string(packOrdinalBound(kappa)));
  out.bins = makeBinPartition(row, std::move(finalBins));
  return out;
}

PackOrdinalSolution solvePackOrdinal(const Instance& instance,
                                     const std::vector<MmsCertificate>* certificates,
                                     const SearchLimits& limits) {
  const std::size_t n = instance.agentCount();
  if (certificates && certificates->size() != n)
    throw ContractViolationError("expected one certificate per agent");

  PackOrdinalSolution out;
  out.ido = toIdo(instance);
  const Instance& ido = out.ido.idoInstance;
  out.idoRun = runPackOrdinal(ido);
  out.certificates.resize(n);
  for (AgentId i = 0; i < n; ++i) {
    const MmsCertificate cert = certificates ? certificateToIdo((*certificates)[i], out.ido, i)
                                             : mmsPack(ido, i, limits);
    out.certificates[i] = certificateFromIdo(cert, out.ido, i);
    out.constructions.push_back(packConstruct(ido.row(i), out.idoRun.allocation.bundles[i],
                                              cert.kappa));
  }

  LiftedAllocation lifted = liftAllocationPack(instance, out.ido, out.idoRun.allocation);
  out.allocation = std::move(lifted.allocation);
  out.witnesses.resize(n);
  for (AgentId i = 0; i < n; ++i)
    out.witnesses[i] = makeBinPartition(
        instance.row(i), mapBins(out.constructions[i].bins.bins, lifted.idoToOriginal));
  return out;
}

}  // namespace binmms
