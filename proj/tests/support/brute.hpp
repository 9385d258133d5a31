#ifndef BINMMS_TESTS_BRUTE_HPP
#define BINMMS_TESTS_BRUTE_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "binmms/matching.hpp"
#include "binmms/model.hpp"

namespace brute {

using binmms::Bundle;
using binmms::ItemId;
using binmms::Rational;

// Calls `visit` with every set partition of `items` (restricted growth strings).
inline void forEachSetPartition(const std::vector<ItemId>& items,
                                const std::function<void(const std::vector<Bundle>&)>& visit) {
  std::vector<Bundle> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == items.size()) {
      visit(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(items[k]);
      rec(k + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({items[k]});
    rec(k + 1);
    blocks.pop_back();
  };
  rec(0);
}

inline Rational total(std::span<const Rational> row, const Bundle& b) {
  Rational s(0);
  for (ItemId e : b) s += row[e];
  return s;
}

inline std::size_t coverValue(std::span<const Rational> row, const Bundle& bundle,
                              const Rational& threshold = Rational(1)) {
  std::size_t best = 0;
  forEachSetPartition(bundle, [&](const std::vector<Bundle>& blocks) {
    std::size_t c = 0;
    for (const auto& b : blocks) c += total(row, b) >= threshold;
    best = std::max(best, c);
  });
  return best;
}

inline std::size_t packCost(std::span<const Rational> row, const Bundle& bundle) {
  if (bundle.empty()) return 0;
  std::size_t best = bundle.size();
  forEachSetPartition(bundle, [&](const std::vector<Bundle>& blocks) {
    for (const auto& b : blocks)
      if (total(row, b) > Rational(1)) return;
    best = std::min(best, blocks.size());
  });
  return best;
}

// Maximum matching on the "pair total <= 1" graph by exhaustive recursion.
inline std::size_t maxPairs(const std::vector<Rational>& sizes) {
  std::vector<char> used(sizes.size(), 0);
  std::function<std::size_t(std::size_t)> rec = [&](std::size_t i) -> std::size_t {
    while (i < sizes.size() && used[i]) ++i;
    if (i == sizes.size()) return 0;
    used[i] = 1;
    std::size_t best = rec(i + 1);
    for (std::size_t j = i + 1; j < sizes.size(); ++j) {
      if (used[j] || sizes[i] + sizes[j] > Rational(1)) continue;
      used[j] = 1;
      best = std::max(best, 1 + rec(i + 1));
      used[j] = 0;
    }
    used[i] = 0;
    return best;
  };
  return rec(0);
}

// Largest envy-free matching over every injective partial assignment.
inline std::size_t maxEnvyFreeSize(const binmms::BipartiteGraph& g) {
  const std::size_t n = g.agentCount();
  const std::size_t p = g.partCount();
  std::vector<long> partOf(n, -1);
  std::vector<char> taken(p, 0);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t a, std::size_t size) {
    if (a == n) {
      for (std::size_t u = 0; u < n; ++u) {
        if (partOf[u] >= 0) continue;
        for (std::size_t q : g.partsOf(u))
          if (taken[q]) return;
      }
      best = std::max(best, size);
      return;
    }
    rec(a + 1, size);
    for (std::size_t q : g.partsOf(a)) {
      if (taken[q]) continue;
      taken[q] = 1;
      partOf[a] = static_cast<long>(q);
      rec(a + 1, size + 1);
      partOf[a] = -1;
      taken[q] = 0;
    }
  };
  rec(0, 0);
  return best;
}

inline binmms::BipartiteGraph randomGraph(std::mt19937_64& rng, std::size_t maxSide = 8) {
  std::uniform_int_distribution<std::size_t> side(1, maxSide);
  const std::size_t n = side(rng);
  const std::size_t p = side(rng);
  std::uniform_int_distribution<int> density(10, 70);
  const int d = density(rng);
  std::uniform_int_distribution<int> coin(0, 99);
  binmms::BipartiteGraph g(n, p);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t q = 0; q < p; ++q)
      if (coin(rng) < d) g.addEdge(a, q);
  return g;
}

// At least as many parts as agents, with one agent adjacent to every part.
inline binmms::BipartiteGraph randomHubGraph(std::mt19937_64& rng, std::size_t maxSide = 8) {
  std::uniform_int_distribution<std::size_t> side(1, maxSide);
  std::size_t n = side(rng);
  std::size_t p = side(rng);
  if (n > p) std::swap(n, p);
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const std::size_t hub = pick(rng);
  binmms::BipartiteGraph g(n, p);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t q = 0; q < p; ++q)
      if (a == hub || coin(rng) < 40) g.addEdge(a, q);
  return g;
}

inline Rational randomSize(std::mt19937_64& rng, std::int64_t maxDen = 12) {
  std::uniform_int_distribution<std::int64_t> den(1, maxDen);
  const std::int64_t q = den(rng);
  std::uniform_int_distribution<std::int64_t> num(1, q);
  return Rational(num(rng), q);
}

// True iff a[k] >= b[k] for all k after sorting both descending (equal lengths).
inline bool dominates(std::vector<Rational> a, std::vector<Rational> b) {
  if (a.size() != b.size()) return false;
  std::sort(a.rbegin(), a.rend());
  std::sort(b.rbegin(), b.rend());
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

inline std::vector<Rational> sizesOf(std::span<const Rational> row, const Bundle& b) {
  std::vector<Rational> out;
  for (ItemId e : b) out.push_back(row[e]);
  return out;
}

}  // namespace brute

#endif  // BINMMS_TESTS_BRUTE_HPP
