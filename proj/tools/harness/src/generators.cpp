#include "binmms/harness/generators.hpp"

#include <random>
#include <string>

#include "binmms/errors.hpp"

namespace binmms::harness {

namespace {

Instance uniformRational(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<std::int64_t> denominator(1, spec.denominator);
  std::vector<std::vector<Rational>> sizes(static_cast<std::size_t>(spec.n));
  for (auto& row : sizes) {
    for (std::int64_t e = 0; e < spec.m; ++e) {
      const std::int64_t q = denominator(rng);
      const std::int64_t p = std::uniform_int_distribution<std::int64_t>(1, q)(rng);
      row.emplace_back(p, q);
    }
  }
  return Instance(std::move(sizes));
}

Instance loneDivider(const GeneratorSpec& spec) {
  const Rational& eps = spec.epsilon;
  if (!eps.isPositive() || eps >= Rational(1, 3))
    throw ContractViolationError("epsilon must lie in (0, 1/3), got " + eps.str());
  std::vector<Rational> row;
  for (const Rational& size : {Rational(2, 3) - eps, Rational(1, 3) - eps, Rational(2) * eps})
    row.insert(row.end(), kLoneDividerGroups, size);
  return Instance(std::vector<std::vector<Rational>>(kLoneDividerAgents, row));
}

}  // namespace

Instance generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::UniformRational:
      if (spec.n <= 0 || spec.m <= 0 || spec.denominator <= 0)
        throw ContractViolationError("n, m and the denominator must be positive");
      return uniformRational(spec);
    case Family::LoneDivider:
      return loneDivider(spec);
    case Family::IdenticalAgents:
      if (spec.n <= 0 || spec.sizes.empty())
        throw ContractViolationError("identical agents need n > 0 and a non-empty size list");
      return Instance(
          std::vector<std::vector<Rational>>(static_cast<std::size_t>(spec.n), spec.sizes));
  }
  throw ContractViolationError("unknown generator family");
}

Instance corpusInstance(std::uint64_t seed, std::size_t maxItems, std::int64_t denominator) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  GeneratorSpec spec;
  spec.seed = seed;
  spec.denominator = denominator;
  spec.n = std::uniform_int_distribution<std::int64_t>(2, 4)(rng);
  spec.m = std::uniform_int_distribution<std::int64_t>(1, static_cast<std::int64_t>(maxItems))(rng);
  return generate(spec);
}

std::vector<MmsCertificate> loneDividerCertificates(const Instance& fixture) {
  if (fixture.agentCount() != kLoneDividerAgents || fixture.itemCount() != 3 * kLoneDividerGroups)
    throw ContractViolationError("not a lone-divider fixture");
  MmsCertificate cert;
  cert.model = Model::Covering;
  cert.kappa = 3;
  for (std::size_t part = 0; part < kLoneDividerAgents; ++part) {
    std::vector<ItemId> items;
    for (std::size_t g = 3 * part; g < 3 * part + 3; ++g)
      for (std::size_t cls = 0; cls < 3; ++cls) items.push_back(cls * kLoneDividerGroups + g);
    cert.witness.push_back(makeBundle(std::move(items)));
  }
  return std::vector<MmsCertificate>(kLoneDividerAgents, cert);
}

}  // namespace binmms::harness
