#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "sensedrift/chinese_whispers.hpp"
#include "sensedrift/dt.hpp"

namespace sensedrift {

// Open neighborhood of a target word: its top-N DT neighbors and the
// surviving edges among them. The target itself is not a node.
struct EgoNetwork {
  std::string target;
  std::vector<std::string> nodes;            // sorted
  std::vector<std::tuple<int, int, int>> edges;  // (i, j, weight), i < j

  WeightedGraph graph() const;
};

// nodes = the N strongest DT neighbors of target (ties broken by word);
// within the induced subgraph each node ranks its incident edges by
// (-weight, other endpoint) and an edge survives if either endpoint ranks
// it within its top n. Throws std::out_of_range if target is not a DT node.
EgoNetwork extract_ego_network(const DTGraph& dt, const std::string& target,
                               int N, int n);

}  // namespace sensedrift
