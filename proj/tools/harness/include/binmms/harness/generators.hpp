#ifndef BINMMS_HARNESS_GENERATORS_HPP
#define BINMMS_HARNESS_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "binmms/model.hpp"

namespace binmms::harness {

enum class Family { UniformRational, LoneDivider, IdenticalAgents };

struct GeneratorSpec {
  Family family = Family::UniformRational;
  /// UniformRational: every size is p/q with 1 <= p <= q <= denominator.
  std::int64_t denominator = 12;
  /// LoneDivider: groups {2/3 - eps, 1/3 - eps, 2 eps}.
  Rational epsilon{1, 100};
  /// IdenticalAgents: the common size list.
  std::vector<Rational> sizes;
  std::uint64_t seed = 0;
  std::int64_t n = 2;
  std::int64_t m = 6;
};

/// Deterministic for a fixed spec. Throws ContractViolationError on
/// non-positive n, m or denominator, or an epsilon outside (0, 1/3).
Instance generate(const GeneratorSpec& spec);

/// Random instance for the acceptance corpus: n in {2, 3, 4}, m in [1, maxItems],
/// sizes with denominators up to `denominator`.
Instance corpusInstance(std::uint64_t seed, std::size_t maxItems = 10,
                        std::int64_t denominator = 12);

/// The lone-divider fixture layout: 20 agents, 60 items of each of the
/// three sizes, listed size class by size class.
inline constexpr std::size_t kLoneDividerAgents = 20;
inline constexpr std::size_t kLoneDividerGroups = 60;

/// kappa = 3 certificates: part p holds groups 3p, 3p+1, 3p+2.
std::vector<MmsCertificate> loneDividerCertificates(const Instance& fixture);

}  // namespace binmms::harness

#endif  // BINMMS_HARNESS_GENERATORS_HPP
