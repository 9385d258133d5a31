#ifndef BINMMS_MATCHING_HPP
#define BINMMS_MATCHING_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace binmms {

/// Agents 0..agentCount-1 on the left, parts 0..partCount-1 on the right.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t agentCount, std::size_t partCount);

  /// Throws ContractViolationError for undeclared vertices. Duplicate edges are ignored.
  void addEdge(std::size_t agent, std::size_t part);
  [[nodiscard]] bool hasEdge(std::size_t agent, std::size_t part) const;

  [[nodiscard]] std::size_t agentCount() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t partCount() const { return partCount_; }
  /// Neighbours in ascending part order.
  [[nodiscard]] const std::vector<std::size_t>& partsOf(std::size_t agent) const {
    return adjacency_[agent];
  }

 private:
  std::size_t partCount_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// (agent, part) pairs, sorted by agent.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  [[nodiscard]] std::size_t size() const { return pairs.size(); }
  [[nodiscard]] std::optional<std::size_t> partOf(std::size_t agent) const;
};

/// Maximum-cardinality matching by augmenting paths, agents tried in
/// ascending order and parts in adjacency order.
Matching maximumMatching(const BipartiteGraph& graph);

/// Maximum-cardinality matching in which no unmatched agent is adjacent to a
/// matched part: a maximum matching with every agent reachable from an
/// unmatched agent along an alternating path dropped.
Matching maxCardinalityEnvyFreeMatching(const BipartiteGraph& graph);

/// True iff `matching` is a matching of `graph` and envy-free for the agents.
bool isEnvyFreeMatching(const BipartiteGraph& graph, const Matching& matching);

}  // namespace binmms

#endif  // BINMMS_MATCHING_HPP
