#include "sensedrift/ego.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace sensedrift {

WeightedGraph EgoNetwork::graph() const {
  WeightedGraph g(static_cast<int>(nodes.size()));
  for (const auto& [i, j, w] : edges) g.add_edge(i, j, static_cast<double>(w));
  return g;
}

EgoNetwork extract_ego_network(const DTGraph& dt, const std::string& target,
                               int N, int n) {
  if (N < 0 || n < 0) throw std::invalid_argument("extract_ego_network: N, n >= 0");
  auto it = dt.adj.find(target);
  if (it == dt.adj.end()) {
    throw std::out_of_range("extract_ego_network: target not in DT: " + target);
  }

  EgoNetwork ego;
  ego.target = target;

  // dt adjacency is already (-weight, word) sorted; the first N entries are
  // exactly the strongest neighbors under the declared tie-break.
  const auto& neighbors = it->second;
  std::size_t keep = std::min<std::size_t>(neighbors.size(), static_cast<std::size_t>(N));
  ego.nodes.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) ego.nodes.push_back(neighbors[i].first);
  std::sort(ego.nodes.begin(), ego.nodes.end());

  std::unordered_map<std::string, int> index;
  index.reserve(ego.nodes.size());
  for (std::size_t i = 0; i < ego.nodes.size(); ++i) {
    index[ego.nodes[i]] = static_cast<int>(i);
  }

  // Incident edges inside the ego graph, per node, in the DT's
  // (-weight, word) order; the first n of each list are "kept by" that node.
  std::vector<std::vector<std::pair<int, int>>> incident(ego.nodes.size());  // (other, weight)
  for (std::size_t i = 0; i < ego.nodes.size(); ++i) {
    const auto& row = dt.adj.at(ego.nodes[i]);
    for (const auto& [word, weight] : row) {
      auto jt = index.find(word);
      if (jt == index.end()) continue;  // outside the ego (incl. the target)
      incident[i].push_back({jt->second, weight});
    }
  }
  std::vector<std::vector<bool>> kept(ego.nodes.size());
  for (std::size_t i = 0; i < ego.nodes.size(); ++i) {
    kept[i].assign(incident[i].size(), false);
    for (std::size_t r = 0; r < incident[i].size() && r < static_cast<std::size_t>(n); ++r) {
      kept[i][r] = true;
    }
  }
  auto rank_of = [&](int u, int v) {
    for (std::size_t r = 0; r < incident[u].size(); ++r) {
      if (incident[u][r].first == v) return kept[u][r];
    }
    return false;
  };
  for (std::size_t i = 0; i < ego.nodes.size(); ++i) {
    for (std::size_t r = 0; r < incident[i].size(); ++r) {
      int j = incident[i][r].first;
      if (j <= static_cast<int>(i)) continue;  // emit each pair once
      if (kept[i][r] || rank_of(j, static_cast<int>(i))) {
        ego.edges.push_back({static_cast<int>(i), j, incident[i][r].second});
      }
    }
  }
  std::sort(ego.edges.begin(), ego.edges.end());
  return ego;
}

}  // namespace sensedrift
