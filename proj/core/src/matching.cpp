#include "binmms/matching.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "binmms/errors.hpp"

namespace binmms {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

BipartiteGraph::BipartiteGraph(std::size_t agentCount, std::size_t partCount)
    : partCount_(partCount), adjacency_(agentCount) {}

void BipartiteGraph::addEdge(std::size_t agent, std::size_t part) {
  if (agent >= adjacency_.size() || part >= partCount_)
    throw ContractViolationError("edge (" + std::to_string(agent) + ", " + std::to_string(part) +
                                 ") references an undeclared vertex");
  auto& adj = adjacency_[agent];
  auto it = std::lower_bound(adj.begin(), adj.end(), part);
  if (it == adj.end() || *it != part) adj.insert(it, part);
}

bool BipartiteGraph::hasEdge(std::size_t agent, std::size_t part) const {
  if (agent >= adjacency_.size()) return false;
  return std::binary_search(adjacency_[agent].begin(), adjacency_[agent].end(), part);
}

std::optional<std::size_t> Matching::partOf(std::size_t agent) const {
  for (const auto& [a, p] : pairs)
    if (a == agent) return p;
  return std::nullopt;
}

namespace {

bool augment(const BipartiteGraph& g, std::size_t agent, std::vector<char>& visited,
             std::vector<std::size_t>& partMate, std::vector<std::size_t>& agentMate) {
  for (std::size_t p : g.partsOf(agent)) {
    if (visited[p]) continue;
    visited[p] = 1;
    if (partMate[p] == kNone || augment(g, partMate[p], visited, partMate, agentMate)) {
      partMate[p] = agent;
      agentMate[agent] = p;
      return true;
    }
  }
  return false;
}

Matching fromMates(const std::vector<std::size_t>& agentMate) {
  Matching m;
  for (std::size_t a = 0; a < agentMate.size(); ++a)
    if (agentMate[a] != kNone) m.pairs.emplace_back(a, agentMate[a]);
  return m;
}

}  // namespace

Matching maximumMatching(const BipartiteGraph& graph) {
  std::vector<std::size_t> partMate(graph.partCount(), kNone);
  std::vector<std::size_t> agentMate(graph.agentCount(), kNone);
  for (std::size_t a = 0; a < graph.agentCount(); ++a) {
    std::vector<char> visited(graph.partCount(), 0);
    augment(graph, a, visited, partMate, agentMate);
  }
  return fromMates(agentMate);
}

Matching maxCardinalityEnvyFreeMatching(const BipartiteGraph& graph) {
  const Matching maximum = maximumMatching(graph);
  std::vector<std::size_t> agentMate(graph.agentCount(), kNone);
  std::vector<std::size_t> partMate(graph.partCount(), kNone);
  for (const auto& [a, p] : maximum.pairs) {
    agentMate[a] = p;
    partMate[p] = a;
  }

  // Alternating BFS: agent -> any part -> that part's mate.
  std::vector<char> reached(graph.agentCount(), 0);
  std::deque<std::size_t> queue;
  for (std::size_t a = 0; a < graph.agentCount(); ++a) {
    if (agentMate[a] == kNone) {
      reached[a] = 1;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t p : graph.partsOf(a)) {
      const std::size_t mate = partMate[p];
      // A free part here would be an augmenting path, impossible for a maximum matching.
      if (mate != kNone && !reached[mate]) {
        reached[mate] = 1;
        queue.push_back(mate);
      }
    }
  }
  for (std::size_t a = 0; a < graph.agentCount(); ++a)
    if (reached[a]) agentMate[a] = kNone;
  return fromMates(agentMate);
}

bool isEnvyFreeMatching(const BipartiteGraph& graph, const Matching& matching) {
  std::vector<char> agentUsed(graph.agentCount(), 0);
  std::vector<char> partUsed(graph.partCount(), 0);
  for (const auto& [a, p] : matching.pairs) {
    if (a >= graph.agentCount() || p >= graph.partCount()) return false;
    if (agentUsed[a] || partUsed[p] || !graph.hasEdge(a, p)) return false;
    agentUsed[a] = partUsed[p] = 1;
  }
  for (std::size_t a = 0; a < graph.agentCount(); ++a) {
    if (agentUsed[a]) continue;
    for (std::size_t p : graph.partsOf(a))
      if (partUsed[p]) return false;
  }
  return true;
}

}  // namespace binmms
