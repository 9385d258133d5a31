#include "binmms/harness/oracle.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "binmms/errors.hpp"

namespace binmms::harness {

namespace {

std::vector<Rational> totals(const std::vector<Rational>& sizes) {
  const std::size_t full = std::size_t{1} << sizes.size();
  std::vector<Rational> sum(full, Rational(0));
  for (std::size_t mask = 1; mask < full; ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    sum[mask] = sum[mask & (mask - 1)] + sizes[low];
  }
  return sum;
}

// best[S] = max(best[S - low], 1 + best[S - B]) over groups B holding low(S) that reach the threshold.
std::vector<std::uint8_t> coverTable(const std::vector<Rational>& sizes, const Rational& threshold) {
  const auto sum = totals(sizes);
  const std::size_t full = sum.size();
  std::vector<char> reaches(full);
  for (std::size_t mask = 0; mask < full; ++mask) reaches[mask] = mask != 0 && sum[mask] >= threshold;
  std::vector<std::uint8_t> best(full, 0);
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    std::uint8_t value = best[mask ^ low];
    const std::size_t rest = mask ^ low;
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t group = sub | low;
      if (reaches[group]) value = std::max<std::uint8_t>(value, 1 + best[mask ^ group]);
      if (sub == 0) break;
    }
    best[mask] = value;
  }
  return best;
}

// fewest[S] = min over groups B holding low(S) with total <= 1 of 1 + fewest[S - B].
std::vector<std::uint8_t> packTable(const std::vector<Rational>& sizes) {
  const auto sum = totals(sizes);
  const std::size_t full = sum.size();
  const Rational one(1);
  std::vector<std::uint8_t> fewest(full, 0);
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const std::size_t rest = mask ^ low;
    std::uint8_t value = 255;
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t group = sub | low;
      if (sum[group] <= one) value = std::min<std::uint8_t>(value, 1 + fewest[mask ^ group]);
      if (sub == 0) break;
    }
    fewest[mask] = value;
  }
  return fewest;
}

std::vector<Rational> pick(std::span<const Rational> row, const Bundle& bundle) {
  if (bundle.size() > kOracleBundleCap)
    throw CapacityExceededError("oracle bundle of " + std::to_string(bundle.size()) +
                                " items exceeds the cap of " + std::to_string(kOracleBundleCap));
  std::vector<Rational> sizes;
  for (ItemId e : bundle) sizes.push_back(row[e]);
  return sizes;
}

std::vector<Rational> wholeRow(const Instance& instance, AgentId agent, std::size_t cap) {
  if (instance.itemCount() > cap || instance.itemCount() > kOracleBundleCap)
    throw CapacityExceededError("oracle MMS over " + std::to_string(instance.itemCount()) +
                                " items exceeds the cap of " + std::to_string(cap));
  const auto row = instance.row(agent);
  return {row.begin(), row.end()};
}

// Combines per-subset values over k parts; empty parts are allowed.
template <typename Better>
std::size_t splitAcross(const std::vector<std::uint8_t>& value, std::size_t parts, Better better) {
  std::vector<std::uint8_t> current = value;
  const std::size_t full = value.size();
  for (std::size_t k = 2; k <= parts; ++k) {
    std::vector<std::uint8_t> next(full);
    for (std::size_t mask = 0; mask < full; ++mask) {
      bool first = true;
      std::uint8_t best = 0;
      for (std::size_t sub = mask;; sub = (sub - 1) & mask) {
        const std::uint8_t worst = better(value[sub], current[mask ^ sub])
                                       ? current[mask ^ sub]
                                       : value[sub];
        if (first || better(worst, best)) best = worst;
        first = false;
        if (sub == 0) break;
      }
      next[mask] = best;
    }
    current = std::move(next);
  }
  return current[full - 1];
}

}  // namespace

std::size_t oracleCover(std::span<const Rational> row, const Bundle& bundle,
                        const Rational& threshold) {
  return coverTable(pick(row, bundle), threshold).back();
}

std::size_t oraclePack(std::span<const Rational> row, const Bundle& bundle) {
  return packTable(pick(row, bundle)).back();
}

std::size_t oracleMmsCover(const Instance& instance, AgentId agent, std::size_t cap) {
  const auto table = coverTable(wholeRow(instance, agent, cap), Rational(1));
  return splitAcross(table, instance.agentCount(),
                     [](std::uint8_t a, std::uint8_t b) { return a > b; });
}

std::size_t oracleMmsPack(const Instance& instance, AgentId agent, std::size_t cap) {
  const auto table = packTable(wholeRow(instance, agent, cap));
  return splitAcross(table, instance.agentCount(),
                     [](std::uint8_t a, std::uint8_t b) { return a < b; });
}

std::size_t typedCover(const std::vector<std::pair<Rational, std::size_t>>& types,
                       const Rational& threshold) {
  if (types.empty()) return 0;
  std::map<std::vector<std::size_t>, std::size_t> memo;
  const std::size_t t = types.size();

  auto solve = [&](auto&& self, const std::vector<std::size_t>& left) -> std::size_t {
    if (auto it = memo.find(left); it != memo.end()) return it->second;
    std::size_t best = 0;
    std::vector<std::size_t> take(t, 0);
    // Enumerate counts of every type but the last; the last tops the group up minimally.
    auto walk = [&](auto&& rec, std::size_t type, const Rational& acc) -> void {
      if (type + 1 == t) {
        std::size_t need = 0;
        if (acc < threshold) {
          const Rational gap = (threshold - acc) / types[type].first;
          need = static_cast<std::size_t>(gap.ceil());
        }
        if (need > left[type]) return;
        if (need == 0 && acc.isZero()) return;
        take[type] = need;
        std::vector<std::size_t> rest = left;
        for (std::size_t q = 0; q < t; ++q) rest[q] -= take[q];
        best = std::max(best, 1 + self(self, rest));
        return;
      }
      Rational sum = acc;
      for (std::size_t c = 0; c <= left[type]; ++c) {
        take[type] = c;
        rec(rec, type + 1, sum);
        if (sum >= threshold) break;
        sum += types[type].first;
      }
      take[type] = 0;
    };
    walk(walk, 0, Rational(0));
    memo.emplace(left, best);
    return best;
  };

  std::vector<std::size_t> counts;
  for (const auto& [size, count] : types) counts.push_back(count);
  return solve(solve, counts);
}

std::uint64_t witnessChecksum(const std::vector<Bundle>& bins) {
  std::uint64_t hash = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      hash ^= (word >> (8 * b)) & 0xffU;
      hash *= 1099511628211ULL;
    }
  };
  for (const auto& bin : bins) {
    for (ItemId e : bin) mix(e);
    mix(~std::uint64_t{0});
  }
  return hash;
}

}  // namespace binmms::harness
