#ifndef BINMMS_COVER_ORDINAL_HPP
#define BINMMS_COVER_ORDINAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "binmms/ido.hpp"
#include "binmms/model.hpp"
#include "binmms/valuation.hpp"

namespace binmms {

/// Agent i receives items i, i+n, i+2n, ... Throws ContractViolationError on non-IDO input.
Allocation roundRobin(const Instance& idoInstance);

/// A large item, a merged pair of mediums, or a pair with the odd medium merged in.
struct SynthesizedItem {
  std::vector<ItemId> parts;
  Rational size;
};

/// Synthesized items in descending size (ties by smallest underlying id).
struct SynthesizedSet {
  std::vector<SynthesizedItem> items;
};

/// Builds P from the bundle's large and medium items (HalfThird scheme).
SynthesizedSet synthesize(std::span<const Rational> row, const Bundle& bundle);

/// ceil(3/4 kappa - 7/4); may be negative.
std::int64_t coverOrdinalBound(std::size_t kappa);

struct CoverConstruction {
  /// First `covered` bins reach 1; leftovers sit in the last covered bin, or
  /// in a single throwaway bin when nothing is covered.
  BinPartition bins;
  std::size_t covered = 0;
  SynthesizedSet synthesized;
  bool caseTwo = false;
  /// Case 2 only: 1 - size(o_j) for the undistributed items when step 3 starts.
  std::vector<Rational> delta;
};

/// Greedy covering construction for one agent's bundle. Never throws on
/// shortfall; callers compare `covered` against coverOrdinalBound.
CoverConstruction coverConstruct(std::span<const Rational> row, const Bundle& bundle,
                                 std::size_t kappa);

struct CoverOrdinalSolution {
  Allocation allocation;
  /// Original sizes and ids; same convention as CoverConstruction::bins.
  std::vector<BinPartition> witnesses;
  std::vector<std::size_t> covered;
  std::vector<MmsCertificate> certificates;
  /// True when the witness was transferred from the construction on A_n.
  std::vector<char> viaLastBundle;
  IdoReduction ido;
  Allocation idoAllocation;
};

/// IDO reduction, round robin, per-agent construction and lift. Certificates,
/// when given, are in original item ids; otherwise exact MMS is computed.
/// Throws TheoremViolationError if an agent's witness falls below the bound.
CoverOrdinalSolution solveCoverOrdinal(const Instance& instance,
                                       const std::vector<MmsCertificate>* certificates = nullptr,
                                       const SearchLimits& limits = {});

}  // namespace binmms

#endif  // BINMMS_COVER_ORDINAL_HPP
