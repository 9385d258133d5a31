#ifndef BINMMS_HARNESS_LONE_DIVIDER_HPP
#define BINMMS_HARNESS_LONE_DIVIDER_HPP

#include <vector>

#include "binmms/model.hpp"

namespace binmms::harness {

/// Plain lone divider on the fixture: the first 19 agents take 12 bundles of
/// five (2/3 - eps) items and 7 bundles of eight (1/3 - eps) items; the last
/// agent is left with the rest.
struct LoneDividerDemo {
  Rational epsilon;
  Instance fixture;
  Allocation allocation;
  /// The last agent's best count of bins reaching 2/3 inside each bundle.
  std::vector<std::size_t> lastAgentValues;
  /// True when no bundle, the residual included, gives her 3 such bins.
  bool lastAgentStuck = false;
};

LoneDividerDemo runLoneDividerDemo(const Rational& epsilon);

}  // namespace binmms::harness

#endif  // BINMMS_HARNESS_LONE_DIVIDER_HPP
