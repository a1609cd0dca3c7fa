#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sensedrift {

// Hub downweighting applied to an edge's influence on its far endpoint:
// top = raw weight, lin = weight/deg(neighbor), log = weight/log2(1+deg).
enum class Weighting { top, lin, log };

Weighting parse_weighting(const std::string& name);  // "top" | "lin" | "log"
std::string weighting_name(Weighting w);

struct WeightedGraph {
  explicit WeightedGraph(int node_count = 0) : adj(node_count) {}
  std::vector<std::vector<std::pair<int, double>>> adj;

  int size() const { return static_cast<int>(adj.size()); }
  void add_edge(int u, int v, double weight);
};

struct CwResult {
  std::vector<int> labels;  // one per node; equal label = same cluster
  int iterations = 0;
  bool converged = false;

  // Clusters as sorted node-index lists, ordered by (size desc, first node).
  std::vector<std::vector<int>> clusters() const;
};

// Randomized label propagation. Every node starts in its own class; each
// iteration visits nodes in a seed-determined random order, and a node
// adopts the class with the largest summed edge influence (ties resolved by
// a seeded draw). Labels update in place within an iteration. Stops at a
// fixed point or after max_iterations. Isolated nodes keep their own class.
CwResult chinese_whispers(const WeightedGraph& graph, Weighting weighting,
                          std::uint64_t seed, int max_iterations);

}  // namespace sensedrift
