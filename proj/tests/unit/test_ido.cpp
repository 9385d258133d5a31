#include <random>

#include "brute.hpp"
#include "doctest.h"

#include "binmms/errors.hpp"
#include "binmms/ido.hpp"
#include "binmms/mms.hpp"
#include "binmms/valuation.hpp"

using namespace binmms;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

Instance randomInstance(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<std::vector<Rational>> rows(n);
  for (auto& r : rows)
    for (std::size_t e = 0; e < m; ++e) r.push_back(brute::randomSize(rng));
  return Instance(rows);
}

Allocation randomAllocation(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  Allocation a;
  a.bundles.assign(n, {});
  std::uniform_int_distribution<std::size_t> who(0, n - 1);
  for (ItemId e = 0; e < m; ++e) a.bundles[who(rng)].push_back(e);
  return a;
}

}  // namespace

TEST_CASE("toIdo examples") {
  const Instance ido({{R(1, 2), R(1, 3)}, {R(1, 2), R(1, 4)}});
  const auto same = toIdo(ido);
  CHECK(same.idoInstance == ido);
  CHECK(same.rankToItem[0] == std::vector<ItemId>{0, 1});

  const auto swapped = toIdo(Instance({{R(1, 3), R(1, 2)}}));
  CHECK(swapped.idoInstance.sizes()[0] == std::vector<Rational>{R(1, 2), R(1, 3)});
  CHECK(swapped.rankToItem[0] == std::vector<ItemId>{1, 0});

  const auto two = toIdo(Instance({{R(1, 2), R(1, 4), R(3, 4)}, {R(1, 4), R(1, 2), R(1, 2)}}));
  CHECK(two.idoInstance.sizes()[0] == std::vector<Rational>{R(3, 4), R(1, 2), R(1, 4)});
  CHECK(two.idoInstance.sizes()[1] == std::vector<Rational>{R(1, 2), R(1, 2), R(1, 4)});
  CHECK(two.rankToItem[1] == std::vector<ItemId>{1, 2, 0});
}

TEST_CASE("crossed preferences lift to each agent's favourite") {
  const Instance inst({{R(1, 2), R(1)}, {R(1), R(1, 2)}});
  const auto ido = toIdo(inst);
  const Allocation idoAlloc{{{0}, {1}}};
  const auto lifted = liftAllocationCover(inst, ido, idoAlloc);
  CHECK(lifted.allocation.bundles[0] == Bundle{1});
  CHECK(lifted.allocation.bundles[1] == Bundle{0});
}

TEST_CASE("single agent pack lift keeps everything") {
  const Instance inst({{R(1, 3), R(3, 4), R(1, 2)}});
  const auto ido = toIdo(inst);
  const auto lifted = liftAllocationPack(inst, ido, {{allItems(3)}});
  CHECK(lifted.allocation.bundles[0] == allItems(3));
  CHECK(packingCost(inst, 0, allItems(3)).cost ==
        packingCost(ido.idoInstance, 0, allItems(3)).cost);
}

TEST_CASE("lift rejects an invalid allocation") {
  const Instance inst({{R(1, 3), R(1, 2)}, {R(1, 2), R(1, 3)}});
  const auto ido = toIdo(inst);
  CHECK_THROWS_AS(liftAllocationCover(inst, ido, {{{0}, {0}}}), InvalidAllocationError);
  CHECK_THROWS_AS(liftAllocationPack(inst, ido, {{{0}}}), InvalidAllocationError);
}

TEST_CASE("lift dominance and oracle monotonicity on random instances") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    const Instance inst = randomInstance(rng, 3, 6);
    const auto ido = toIdo(inst);
    CHECK(isIdo(ido.idoInstance));
    const Allocation idoAlloc = randomAllocation(rng, 3, 6);
    const auto cover = liftAllocationCover(inst, ido, idoAlloc);
    const auto pack = liftAllocationPack(inst, ido, idoAlloc);
    CHECK(isValidAllocation(cover.allocation, 3, 6));
    CHECK(isValidAllocation(pack.allocation, 3, 6));
    for (AgentId i = 0; i < 3; ++i) {
      const auto idoSizes = brute::sizesOf(ido.idoInstance.row(i), idoAlloc.bundles[i]);
      CHECK(brute::dominates(brute::sizesOf(inst.row(i), cover.allocation.bundles[i]), idoSizes));
      CHECK(brute::dominates(idoSizes, brute::sizesOf(inst.row(i), pack.allocation.bundles[i])));
      CHECK(brute::coverValue(inst.row(i), cover.allocation.bundles[i]) >=
            brute::coverValue(ido.idoInstance.row(i), idoAlloc.bundles[i]));
      CHECK(brute::packCost(inst.row(i), pack.allocation.bundles[i]) <=
            brute::packCost(ido.idoInstance.row(i), idoAlloc.bundles[i]));
      for (ItemId e : idoAlloc.bundles[i]) {
        CHECK(inst.size(i, cover.idoToOriginal[e]) >= ido.idoInstance.size(i, e));
        CHECK(inst.size(i, pack.idoToOriginal[e]) <= ido.idoInstance.size(i, e));
      }
    }
  }
}

TEST_CASE("mms is invariant under the reduction") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = randomInstance(rng, 2, 7);
    const auto ido = toIdo(inst);
    for (AgentId i = 0; i < 2; ++i) {
      CHECK(mmsCover(inst, i).kappa == mmsCover(ido.idoInstance, i).kappa);
      CHECK(mmsPack(inst, i).kappa == mmsPack(ido.idoInstance, i).kappa);
    }
  }
}

TEST_CASE("certificates map to ranks and back") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = randomInstance(rng, 2, 6);
    const auto ido = toIdo(inst);
    for (AgentId i = 0; i < 2; ++i) {
      const auto cert = mmsCover(inst, i);
      const auto there = certificateToIdo(cert, ido, i);
      CHECK(there.kappa == cert.kappa);
      for (std::size_t p = 0; p < cert.witness.size(); ++p)
        CHECK(bundleSize(ido.idoInstance, i, there.witness[p]) ==
              bundleSize(inst, i, cert.witness[p]));
      const auto back = certificateFromIdo(there, ido, i);
      CHECK(back.witness == cert.witness);
    }
  }
}

TEST_CASE("mapBins follows the lift") {
  const std::vector<ItemId> map{2, 0, 1};
  CHECK(mapBins({{0, 1}, {2}}, map) == std::vector<Bundle>{{0, 2}, {1}});
}
