#ifndef BINMMS_HARNESS_ORACLE_HPP
#define BINMMS_HARNESS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "binmms/model.hpp"

namespace binmms::harness {

// Brute-force values kept apart from the solver code paths.

/// Largest bundle handled by the per-bundle oracles.
inline constexpr std::size_t kOracleBundleCap = 14;

/// Number of disjoint groups of `bundle` each reaching `threshold`.
std::size_t oracleCover(std::span<const Rational> row, const Bundle& bundle,
                        const Rational& threshold = Rational(1));

/// Fewest groups of total <= 1 covering `bundle`.
std::size_t oraclePack(std::span<const Rational> row, const Bundle& bundle);

/// Exact covering / packing MMS of one agent over all items. Throws
/// CapacityExceededError when itemCount exceeds `cap`.
std::size_t oracleMmsCover(const Instance& instance, AgentId agent, std::size_t cap = 12);
std::size_t oracleMmsPack(const Instance& instance, AgentId agent, std::size_t cap = 12);

/// Covering value for a multiset given as (size, count) pairs; handles large
/// counts of few distinct sizes.
std::size_t typedCover(const std::vector<std::pair<Rational, std::size_t>>& types,
                       const Rational& threshold);

/// FNV-1a over the bin contents.
std::uint64_t witnessChecksum(const std::vector<Bundle>& bins);

}  // namespace binmms::harness

#endif  // BINMMS_HARNESS_ORACLE_HPP
