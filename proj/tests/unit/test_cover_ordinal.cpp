#include <random>

#include "brute.hpp"
#include "doctest.h"

#include "binmms/cover_ordinal.hpp"
#include "binmms/errors.hpp"
#include "binmms/mms.hpp"

using namespace binmms;

namespace {

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

std::vector<Rational> synthSizes(const SynthesizedSet& set) {
  std::vector<Rational> out;
  for (const auto& o : set.items) out.push_back(o.size);
  return out;
}

}  // namespace

TEST_CASE("roundRobin examples") {
  const Instance five(std::vector<std::vector<Rational>>(2, std::vector<Rational>(5, R(1, 5))));
  CHECK(roundRobin(five).bundles == std::vector<Bundle>{{0, 2, 4}, {1, 3}});
  const Instance single({{R(1, 2), R(1, 3)}});
  CHECK(roundRobin(single).bundles == std::vector<Bundle>{{0, 1}});
  const Instance square(std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, R(1))));
  CHECK(roundRobin(square).bundles == std::vector<Bundle>{{0}, {1}, {2}});
  CHECK_THROWS_AS(roundRobin(Instance({{R(1, 3), R(1, 2)}})), ContractViolationError);
}

TEST_CASE("synthesize examples") {
  const std::vector<Rational> a{R(9, 10), R(2, 5)};
  CHECK(synthSizes(synthesize(a, {0, 1})) == std::vector<Rational>{R(9, 10), R(2, 5)});

  const std::vector<Rational> b{R(11, 20), R(2, 5)};
  const auto merged = synthesize(b, {0, 1});
  CHECK(synthSizes(merged) == std::vector<Rational>{R(19, 20)});
  CHECK(makeBundle(merged.items[0].parts) == Bundle{0, 1});

  const std::vector<Rational> c{R(9, 20), R(2, 5), R(1, 10)};
  CHECK(synthSizes(synthesize(c, {0, 1, 2})) == std::vector<Rational>{R(17, 20)});

  CHECK(synthesize(c, {2}).items.empty());

  const std::vector<Rational> lone{R(2, 5), R(1, 5)};
  CHECK(synthSizes(synthesize(lone, {0, 1})) == std::vector<Rational>{R(2, 5)});
}

TEST_CASE("coverOrdinalBound arithmetic") {
  CHECK(coverOrdinalBound(0) == -1);
  CHECK(coverOrdinalBound(1) == -1);
  CHECK(coverOrdinalBound(2) == 0);
  CHECK(coverOrdinalBound(3) == 1);
  CHECK(coverOrdinalBound(4) == 2);
  CHECK(coverOrdinalBound(5) == 2);
  CHECK(coverOrdinalBound(9) == 5);
  for (std::size_t k = 0; k < 40; ++k) {
    const Rational exact = R(3, 4) * R(static_cast<std::int64_t>(k)) - R(7, 4);
    CHECK(coverOrdinalBound(k) == exact.ceil());
  }
}

TEST_CASE("coverConstruct on halves") {
  const std::vector<Rational> row(8, R(1, 2));
  const auto built = coverConstruct(row, {0, 2, 4, 6}, 2);
  CHECK(built.covered == 2);
  CHECK(isPartitionOf(built.bins.bins, {0, 2, 4, 6}, 8));
  CHECK(brute::coverValue(row, {0, 2, 4, 6}) == 2);
}

TEST_CASE("coverConstruct with only small items") {
  const std::vector<Rational> row(7, R(1, 4));
  const auto built = coverConstruct(row, allItems(7), 1);
  CHECK(built.covered == 1);
  CHECK(built.synthesized.items.empty());
  CHECK(isPartitionOf(built.bins.bins, allItems(7), 7));
  CHECK(coverConstruct(row, {}, 0).covered == 0);
}

TEST_CASE("synthesized and construction invariants on random rows") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 400; ++trial) {
    std::uniform_int_distribution<std::size_t> len(0, 14);
    const std::size_t m = len(rng);
    std::vector<Rational> row;
    for (std::size_t e = 0; e < m; ++e) row.push_back(brute::randomSize(rng, 15));
    std::sort(row.rbegin(), row.rend());
    const Bundle bundle = allItems(m);
    const auto P = synthesize(row, bundle);
    for (std::size_t j = 0; j + 1 < P.items.size(); ++j) {
      CHECK(P.items[j].size >= P.items[j + 1].size);
      CHECK(P.items[j].size > R(1, 2));
    }
    for (std::size_t j = 0; j < P.items.size(); ++j)
      for (std::size_t q = j + 1; q < P.items.size(); ++q)
        CHECK(P.items[j].size + P.items[q].size >= R(1));
    std::vector<ItemId> under;
    for (const auto& o : P.items) under.insert(under.end(), o.parts.begin(), o.parts.end());
    std::vector<ItemId> lm;
    for (ItemId e : bundle)
      if (isLargeOrMedium(row[e], ClassScheme::HalfThird)) lm.push_back(e);
    CHECK(makeBundle(under) == lm);
    CHECK(under.size() == lm.size());

    std::uniform_int_distribution<std::size_t> kd(0, 8);
    const std::size_t kappa = kd(rng);
    const auto built = coverConstruct(row, bundle, kappa);
    CHECK(isPartitionOf(built.bins.bins, bundle, m));
    for (std::size_t b = 0; b < built.covered; ++b) CHECK(built.bins.totals[b] >= R(1));
    if (built.caseTwo && !built.delta.empty()) {
      for (std::size_t j = 0; j + 1 < built.delta.size(); ++j)
        CHECK(built.delta[j] <= built.delta[j + 1]);
      if (built.delta.size() >= 2) CHECK(built.delta[built.delta.size() - 2] < R(1, 3));
      CHECK(built.delta.back() < R(2, 3));
    }
  }
}

TEST_CASE("round robin dominance and the end-to-end bound") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 80; ++trial) {
    std::uniform_int_distribution<std::size_t> nd(2, 3);
    std::uniform_int_distribution<std::size_t> md(1, 10);
    const std::size_t n = nd(rng);
    const std::size_t m = md(rng);
    std::vector<std::vector<Rational>> rows(n);
    for (auto& r : rows)
      for (std::size_t e = 0; e < m; ++e) r.push_back(brute::randomSize(rng));
    const Instance inst(rows);
    const auto sol = solveCoverOrdinal(inst);
    CHECK(isValidAllocation(sol.allocation, n, m));

    const auto& ido = sol.ido.idoInstance;
    const Bundle& last = sol.idoAllocation.bundles.back();
    for (AgentId i = 0; i < n; ++i) {
      const Bundle& own = sol.idoAllocation.bundles[i];
      REQUIRE(own.size() >= last.size());
      for (std::size_t r = 0; r < last.size(); ++r)
        CHECK(ido.size(i, own[r]) >= ido.size(i, last[r]));

      const auto bound = coverOrdinalBound(sol.certificates[i].kappa);
      CHECK(static_cast<std::int64_t>(sol.covered[i]) >= bound);
      const auto value = brute::coverValue(inst.row(i), sol.allocation.bundles[i]);
      CHECK(static_cast<std::int64_t>(value) >= bound);
      CHECK(value >= sol.covered[i]);
      CHECK(isPartitionOf(sol.witnesses[i].bins, sol.allocation.bundles[i], m));
      for (std::size_t b = 0; b < sol.covered[i]; ++b)
        CHECK(brute::total(inst.row(i), sol.witnesses[i].bins[b]) >= R(1));
    }
  }
}

TEST_CASE("certificates with the wrong arity are rejected") {
  const Instance inst(std::vector<std::vector<Rational>>(2, std::vector<Rational>(2, R(1))));
  std::vector<MmsCertificate> one{mmsCover(inst, 0)};
  CHECK_THROWS_AS(solveCoverOrdinal(inst, &one), ContractViolationError);
}
