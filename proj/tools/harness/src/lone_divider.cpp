#include "binmms/harness/lone_divider.hpp"

#include <algorithm>
#include <map>

#include "binmms/harness/generators.hpp"
#include "binmms/harness/oracle.hpp"

namespace binmms::harness {

LoneDividerDemo runLoneDividerDemo(const Rational& epsilon) {
  GeneratorSpec spec;
  spec.family = Family::LoneDivider;
  spec.epsilon = epsilon;

  LoneDividerDemo demo;
  demo.epsilon = epsilon;
  demo.fixture = generate(spec);
  const std::size_t n = demo.fixture.agentCount();
  const std::size_t g = kLoneDividerGroups;

  auto& bundles = demo.allocation.bundles;
  bundles.assign(n, {});
  std::size_t agent = 0;
  for (std::size_t b = 0; b < 12; ++b, ++agent)
    for (std::size_t q = 0; q < 5; ++q) bundles[agent].push_back(5 * b + q);
  for (std::size_t b = 0; b < 7; ++b, ++agent)
    for (std::size_t q = 0; q < 8; ++q) bundles[agent].push_back(g + 8 * b + q);
  for (ItemId e = g + 56; e < 3 * g; ++e) bundles[agent].push_back(e);

  const auto row = demo.fixture.row(n - 1);
  for (const auto& bundle : bundles) {
    std::map<Rational, std::size_t> counts;
    for (ItemId e : bundle) ++counts[row[e]];
    std::vector<std::pair<Rational, std::size_t>> types(counts.rbegin(), counts.rend());
    demo.lastAgentValues.push_back(typedCover(types, Rational(2, 3)));
  }
  demo.lastAgentStuck = std::all_of(demo.lastAgentValues.begin(), demo.lastAgentValues.end(),
                                    [](std::size_t v) { return v < 3; });
  return demo;
}

}  // namespace binmms::harness
