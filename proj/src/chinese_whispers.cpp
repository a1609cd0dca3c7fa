#include "sensedrift/chinese_whispers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sensedrift/hashing.hpp"

namespace sensedrift {

Weighting parse_weighting(const std::string& name) {
  if (name == "top") return Weighting::top;
  if (name == "lin") return Weighting::lin;
  if (name == "log") return Weighting::log;
  throw std::invalid_argument("unknown weighting: " + name);
}

std::string weighting_name(Weighting w) {
  switch (w) {
    case Weighting::top: return "top";
    case Weighting::lin: return "lin";
    case Weighting::log: return "log";
  }
  return "?";
}

void WeightedGraph::add_edge(int u, int v, double weight) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (!(weight > 0.0)) throw std::invalid_argument("edge weight must be positive");
  adj[u].push_back({v, weight});
  adj[v].push_back({u, weight});
}

std::vector<std::vector<int>> CwResult::clusters() const {
  std::map<int, std::vector<int>> by_label;
  for (int node = 0; node < static_cast<int>(labels.size()); ++node) {
    by_label[labels[node]].push_back(node);
  }
  std::vector<std::vector<int>> out;
  out.reserve(by_label.size());
  for (auto& [label, members] : by_label) out.push_back(std::move(members));
  std::stable_sort(out.begin(), out.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return out;
}

CwResult chinese_whispers(const WeightedGraph& graph, Weighting weighting,
                          std::uint64_t seed, int max_iterations) {
  if (max_iterations < 1) {
    throw std::invalid_argument("chinese_whispers: max_iterations must be >= 1");
  }
  const int node_count = graph.size();
  CwResult result;
  result.labels.resize(node_count);
  std::iota(result.labels.begin(), result.labels.end(), 0);
  if (node_count == 0) {
    result.converged = true;
    return result;
  }

  // Influence of an edge is weight times the far endpoint's downweighting
  // factor, precomputed per node.
  std::vector<double> factor(node_count, 1.0);
  for (int v = 0; v < node_count; ++v) {
    double degree = static_cast<double>(graph.adj[v].size());
    if (degree == 0) continue;
    switch (weighting) {
      case Weighting::top: factor[v] = 1.0; break;
      case Weighting::lin: factor[v] = 1.0 / degree; break;
      case Weighting::log: factor[v] = 1.0 / std::log2(1.0 + degree); break;
    }
  }

  SplitMix64 rng(seed);
  std::vector<int> order(node_count);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> score(node_count, 0.0);
  std::vector<int> touched, best;

  for (int iter = 0; iter < max_iterations; ++iter) {
    rng.shuffle(order);
    bool changed = false;
    for (int u : order) {
      if (graph.adj[u].empty()) continue;
      touched.clear();
      for (const auto& [v, weight] : graph.adj[u]) {
        int label = result.labels[v];
        if (score[label] == 0.0) touched.push_back(label);
        score[label] += weight * factor[v];
      }
      best.clear();
      double best_score = 0.0;
      for (int label : touched) {
        if (score[label] > best_score) {
          best_score = score[label];
          best.clear();
          best.push_back(label);
        } else if (score[label] == best_score) {
          best.push_back(label);
        }
        score[label] = 0.0;
      }
      // The tie list order depends on adjacency order; sort so the seeded
      // draw is the only source of randomness.
      std::sort(best.begin(), best.end());
      int chosen = best.size() == 1
                       ? best.front()
                       : best[static_cast<std::size_t>(rng.below(best.size()))];
      if (chosen != result.labels[u]) {
        result.labels[u] = chosen;
        changed = true;
      }
    }
    result.iterations = iter + 1;
    if (!changed) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace sensedrift
