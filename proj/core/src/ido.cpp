#include "binmms/ido.hpp"

#include <algorithm>
#include <numeric>

#include "binmms/errors.hpp"

namespace binmms {

IdoReduction toIdo(const Instance& instance) {
  const std::size_t n = instance.agentCount();
  const std::size_t m = instance.itemCount();
  IdoReduction out;
  out.rankToItem.resize(n);
  std::vector<std::vector<Rational>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& perm = out.rankToItem[i];
    perm.resize(m);
    std::iota(perm.begin(), perm.end(), ItemId{0});
    const auto row = instance.row(i);
    std::stable_sort(perm.begin(), perm.end(), [&](ItemId a, ItemId b) { return row[a] > row[b]; });
    rows[i].reserve(m);
    for (ItemId e : perm) rows[i].push_back(row[e]);
  }
  out.idoInstance = Instance(std::move(rows));
  return out;
}

namespace {

enum class Pick { Largest, Smallest };

LiftedAllocation lift(const Instance& original, const IdoReduction& ido,
                      const Allocation& idoAllocation, Pick pick) {
  const std::size_t n = original.agentCount();
  const std::size_t m = original.itemCount();
  if (ido.idoInstance.agentCount() != n || ido.idoInstance.itemCount() != m)
    throw InvalidAllocationError("IDO reduction does not match the original instance");
  requireValidAllocation(idoAllocation, n, m);

  std::vector<AgentId> owner(m);
  for (AgentId a = 0; a < n; ++a)
    for (ItemId e : idoAllocation.bundles[a]) owner[e] = a;

  LiftedAllocation out;
  out.allocation.bundles.assign(n, {});
  out.idoToOriginal.assign(m, 0);
  std::vector<char> taken(m, 0);
  // Each agent's rank list is already sorted by her size; walk it with a cursor.
  std::vector<std::size_t> cursor(n, pick == Pick::Largest ? 0 : m);

  auto visit = [&](ItemId j) {
    const AgentId a = owner[j];
    const auto& ranks = ido.rankToItem[a];
    ItemId chosen = 0;
    if (pick == Pick::Largest) {
      while (taken[ranks[cursor[a]]]) ++cursor[a];
      chosen = ranks[cursor[a]];
    } else {
      // Smallest remaining: last untaken rank. Among equal sizes the
      // stable sort put smaller ids first, so scan the tie run for the smallest id.
      while (taken[ranks[cursor[a] - 1]]) --cursor[a];
      std::size_t r = cursor[a] - 1;
      const auto row = original.row(a);
      chosen = ranks[r];
      for (std::size_t q = r; q-- > 0;) {
        if (row[ranks[q]] != row[ranks[r]]) break;
        if (!taken[ranks[q]]) chosen = ranks[q];
      }
    }
    taken[chosen] = 1;
    out.idoToOriginal[j] = chosen;
    out.allocation.bundles[a].push_back(chosen);
  };

  if (pick == Pick::Largest) {
    for (ItemId j = 0; j < m; ++j) visit(j);
  } else {
    for (ItemId j = m; j-- > 0;) visit(j);
  }
  for (auto& b : out.allocation.bundles) std::sort(b.begin(), b.end());
  return out;
}

}  // namespace

LiftedAllocation liftAllocationCover(const Instance& original, const IdoReduction& ido,
                                     const Allocation& idoAllocation) {
  return lift(original, ido, idoAllocation, Pick::Largest);
}

LiftedAllocation liftAllocationPack(const Instance& original, const IdoReduction& ido,
                                    const Allocation& idoAllocation) {
  return lift(original, ido, idoAllocation, Pick::Smallest);
}

std::vector<Bundle> mapBins(const std::vector<Bundle>& idoBins,
                            const std::vector<ItemId>& idoToOriginal) {
  std::vector<Bundle> out;
  out.reserve(idoBins.size());
  for (const auto& bin : idoBins) {
    Bundle mapped;
    mapped.reserve(bin.size());
    for (ItemId e : bin) mapped.push_back(idoToOriginal.at(e));
    out.push_back(makeBundle(std::move(mapped)));
  }
  return out;
}

MmsCertificate certificateToIdo(const MmsCertificate& certificate, const IdoReduction& ido,
                                AgentId agent) {
  const auto& ranks = ido.rankToItem.at(agent);
  std::vector<ItemId> rankOf(ranks.size());
  for (std::size_t r = 0; r < ranks.size(); ++r) rankOf[ranks[r]] = r;
  MmsCertificate out = certificate;
  for (auto& part : out.witness) {
    for (auto& e : part) {
      if (e >= rankOf.size()) throw InvalidWitnessError("certificate references unknown item");
      e = rankOf[e];
    }
    part = makeBundle(std::move(part));
  }
  return out;
}

MmsCertificate certificateFromIdo(const MmsCertificate& certificate, const IdoReduction& ido,
                                  AgentId agent) {
  const auto& ranks = ido.rankToItem.at(agent);
  MmsCertificate out = certificate;
  for (auto& part : out.witness) {
    for (auto& e : part) e = ranks.at(e);
    part = makeBundle(std::move(part));
  }
  return out;
}

}  // namespace binmms
