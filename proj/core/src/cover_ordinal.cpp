#include "binmms/cover_ordinal.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "binmms/errors.hpp"
#include "binmms/mms.hpp"

namespace binmms {

Allocation roundRobin(const Instance& idoInstance) {
  if (!isIdo(idoInstance)) throw ContractViolationError("round robin requires an IDO instance");
  const std::size_t n = idoInstance.agentCount();
  Allocation out;
  out.bundles.assign(n, {});
  for (ItemId e = 0; e < idoInstance.itemCount(); ++e) out.bundles[e % n].push_back(e);
  return out;
}

namespace {

void sortDesc(std::span<const Rational> row, std::vector<ItemId>& items) {
  std::sort(items.begin(), items.end(), [&](ItemId a, ItemId b) {
    if (row[a] != row[b]) return row[a] > row[b];
    return a < b;
  });
}

struct BinBuilder {
  std::span<const Rational> row;
  std::deque<ItemId> pool;
  std::vector<Bundle> covered;
  std::vector<ItemId> leftover;

  // Adds smalls until the bin reaches 1. An uncovered bin goes to the leftover pile.
  void fill(std::vector<ItemId> bin) {
    Rational total = bundleSize(row, bin);
    const Rational one(1);
    while (total < one && !pool.empty()) {
      total += row[pool.front()];
      bin.push_back(pool.front());
      pool.pop_front();
    }
    if (total >= one) covered.push_back(std::move(bin));
    else leftover.insert(leftover.end(), bin.begin(), bin.end());
  }

  void smallOnlyBins() {
    while (!pool.empty()) fill({});
  }

  BinPartition finish() {
    leftover.insert(leftover.end(), pool.begin(), pool.end());
    pool.clear();
    std::vector<Bundle> bins = covered;
    if (!leftover.empty()) {
      if (bins.empty()) bins.emplace_back();
      bins.back().insert(bins.back().end(), leftover.begin(), leftover.end());
    }
    for (auto& b : bins) b = makeBundle(std::move(b));
    return makeBinPartition(row, std::move(bins));
  }
};

std::vector<ItemId> concat(const std::vector<ItemId>& a, const std::vector<ItemId>& b) {
  std::vector<ItemId> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

SynthesizedSet synthesize(std::span<const Rational> row, const Bundle& bundle) {
  std::vector<ItemId> mediums;
  SynthesizedSet out;
  for (ItemId e : bundle) {
    switch (classifyItem(row[e], ClassScheme::HalfThird)) {
      case SizeClass::Large: out.items.push_back({{e}, row[e]}); break;
      case SizeClass::Medium: mediums.push_back(e); break;
      case SizeClass::Small: break;
    }
  }
  sortDesc(row, mediums);
  std::size_t next = 0;
  for (; next + 1 < mediums.size(); next += 2) {
    const ItemId a = mediums[next];
    const ItemId b = mediums[next + 1];
    out.items.push_back({{a, b}, row[a] + row[b]});
  }

  auto order = [](const SynthesizedItem& x, const SynthesizedItem& y) {
    if (x.size != y.size) return x.size > y.size;
    return *std::min_element(x.parts.begin(), x.parts.end()) <
           *std::min_element(y.parts.begin(), y.parts.end());
  };
  std::sort(out.items.begin(), out.items.end(), order);

  if (next < mediums.size()) {
    const ItemId lone = mediums[next];
    if (out.items.empty() || row[lone] + out.items.back().size >= Rational(1)) {
      out.items.push_back({{lone}, row[lone]});
    } else {
      out.items.back().parts.push_back(lone);
      out.items.back().size += row[lone];
    }
    std::sort(out.items.begin(), out.items.end(), order);
  }
  return out;
}

std::int64_t coverOrdinalBound(std::size_t kappa) {
  const auto k = static_cast<std::int64_t>(kappa);
  const std::int64_t num = 3 * k - 7;
  return num >= 0 ? (num + 3) / 4 : -((-num) / 4);
}

CoverConstruction coverConstruct(std::span<const Rational> row, const Bundle& bundle,
                                 std::size_t kappa) {
  CoverConstruction out;
  out.synthesized = synthesize(row, bundle);
  const auto& P = out.synthesized.items;
  const auto k = static_cast<std::int64_t>(P.size());

  std::vector<ItemId> smalls;
  for (ItemId e : bundle)
    if (classifyItem(row[e], ClassScheme::HalfThird) == SizeClass::Small) smalls.push_back(e);
  sortDesc(row, smalls);
  BinBuilder builder{row, {smalls.begin(), smalls.end()}, {}, {}};

  if (4 * k <= 3 * static_cast<std::int64_t>(kappa) - 2) {
    for (const auto& o : P) builder.fill(o.parts);
    builder.smallOnlyBins();
  } else {
    out.caseTwo = true;
    const std::int64_t z = coverOrdinalBound(kappa);
    const auto pairs = static_cast<std::size_t>(std::clamp<std::int64_t>(k - z, 0, k / 2));

    std::vector<std::size_t> rest(P.size());
    for (std::size_t j = 0; j < P.size(); ++j) rest[j] = j;
    // Step 1: the smallest items, each with the next smallest. A partner that
    // already reaches 1 alone is left for step 3.
    for (std::size_t q = 0; q < pairs && P[rest[rest.size() - 2]].size < Rational(1); ++q) {
      const std::size_t a = rest.back();
      rest.pop_back();
      const std::size_t b = rest.back();
      rest.pop_back();
      builder.fill(concat(P[b].parts, P[a].parts));
    }
    // Step 2: two smallest while at least two remaining are at most 2/3.
    const Rational twoThirds(2, 3);
    auto smallCount = [&] {
      return std::count_if(rest.begin(), rest.end(),
                           [&](std::size_t j) { return P[j].size <= twoThirds; });
    };
    while (smallCount() >= 2) {
      const std::size_t a = rest.back();
      rest.pop_back();
      const std::size_t b = rest.back();
      rest.pop_back();
      builder.fill(concat(P[b].parts, P[a].parts));
    }
    for (std::size_t j : rest) out.delta.push_back(Rational(1) - P[j].size);
    // Step 3: ascending from the second smallest, the smallest last.
    if (!rest.empty()) {
      for (std::size_t q = rest.size() - 1; q-- > 0;) builder.fill(P[rest[q]].parts);
      builder.fill(P[rest.back()].parts);
    }
    builder.smallOnlyBins();
  }

  out.covered = builder.covered.size();
  out.bins = builder.finish();
  return out;
}

namespace {

// Re-expresses bins over A_n on A_i, matching the k-th item of one with the k-th of the other.
BinPartition transferFromLastBundle(std::span<const Rational> row, const Bundle& own,
                                    const Bundle& last, const BinPartition& bins,
                                    std::size_t covered) {
  std::vector<ItemId> toOwn(row.size(), 0);
  for (std::size_t r = 0; r < last.size(); ++r) toOwn[last[r]] = own[r];
  std::vector<Bundle> mapped;
  for (const auto& bin : bins.bins) {
    Bundle b;
    for (ItemId e : bin) b.push_back(toOwn[e]);
    mapped.push_back(std::move(b));
  }
  std::vector<ItemId> extra(own.begin() + static_cast<std::ptrdiff_t>(last.size()), own.end());
  if (!extra.empty()) {
    if (mapped.empty()) mapped.emplace_back();
    auto& sink = covered > 0 ? mapped[covered - 1] : mapped.back();
    sink.insert(sink.end(), extra.begin(), extra.end());
  }
  for (auto& b : mapped) b = makeBundle(std::move(b));
  return makeBinPartition(row, std::move(mapped));
}

}  // namespace

CoverOrdinalSolution solveCoverOrdinal(const Instance& instance,
                                       const std::vector<MmsCertificate>* certificates,
                                       const SearchLimits& limits) {
  const std::size_t n = instance.agentCount();
  if (certificates && certificates->size() != n)
    throw ContractViolationError("expected one certificate per agent");

  CoverOrdinalSolution out;
  out.ido = toIdo(instance);
  const Instance& ido = out.ido.idoInstance;
  out.idoAllocation = roundRobin(ido);
  const Bundle& last = out.idoAllocation.bundles.back();

  std::vector<BinPartition> idoWitnesses(n);
  out.covered.assign(n, 0);
  out.viaLastBundle.assign(n, 0);
  out.certificates.resize(n);
  for (AgentId i = 0; i < n; ++i) {
    const MmsCertificate cert = certificates ? certificateToIdo((*certificates)[i], out.ido, i)
                                             : mmsCover(ido, i, limits);
    out.certificates[i] = certificateFromIdo(cert, out.ido, i);
    const auto row = ido.row(i);
    const Bundle& own = out.idoAllocation.bundles[i];
    const std::int64_t bound = coverOrdinalBound(cert.kappa);

    CoverConstruction built = coverConstruct(row, own, cert.kappa);
    if (static_cast<std::int64_t>(built.covered) < bound) {
      CoverConstruction fromLast = coverConstruct(row, last, cert.kappa);
      if (static_cast<std::int64_t>(fromLast.covered) < bound)
        throw TheoremViolationError("agent " + std::to_string(i) + " covers " +
                                    std::to_string(fromLast.covered) + " bins, bound " +
                                    std::to_string(bound));
      built.bins = transferFromLastBundle(row, own, last, fromLast.bins, fromLast.covered);
      built.covered = fromLast.covered;
      out.viaLastBundle[i] = 1;
    }
    out.covered[i] = built.covered;
    idoWitnesses[i] = std::move(built.bins);
  }

  LiftedAllocation lifted = liftAllocationCover(instance, out.ido, out.idoAllocation);
  out.allocation = std::move(lifted.allocation);
  out.witnesses.resize(n);
  for (AgentId i = 0; i < n; ++i)
    out.witnesses[i] =
        makeBinPartition(instance.row(i), mapBins(idoWitnesses[i].bins, lifted.idoToOriginal));
  return out;
}

}  // namespace binmms
