#include "sensedrift/dt.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sensedrift/lmi.hpp"

namespace sensedrift {

std::size_t DTGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [word, neighbors] : adj) twice += neighbors.size();
  return twice / 2;
}

int DTGraph::weight(const std::string& u, const std::string& v) const {
  auto it = adj.find(u);
  if (it == adj.end()) return 0;
  for (const auto& [neighbor, w] : it->second) {
    if (neighbor == v) return w;
  }
  return 0;
}

SalientFeatures rank_features(const SliceCounts& counts,
                              const std::string& slice_id, std::size_t p) {
  if (p < 1) throw std::invalid_argument("rank_features: p must be >= 1");
  SalientFeatures salient;
  salient.slice_id = slice_id;
  for (const auto& [word, feats] : counts.pair) {
    std::vector<ScoredFeature> scored;
    scored.reserve(feats.size());
    std::uint64_t c_w = counts.word_count.at(word);
    for (const auto& [feature, c_wf] : feats) {
      double lmi = compute_lmi(c_wf, c_w, counts.feature_count.at(feature),
                               counts.total);
      if (lmi > 0.0) scored.push_back({feature, lmi});
    }
    std::sort(scored.begin(), scored.end(),
              [](const ScoredFeature& a, const ScoredFeature& b) {
                if (a.lmi != b.lmi) return a.lmi > b.lmi;
                return a.feature < b.feature;
              });
    if (scored.size() > p) scored.resize(p);
    salient.by_word.emplace(word, std::move(scored));
  }
  return salient;
}

SalientFeatures rank_features(const TimeSlicedCounts& counts,
                              const std::string& slice_id, std::size_t p) {
  return rank_features(counts.slice(slice_id), slice_id, p);
}

DTGraph build_dt(const SalientFeatures& salient) {
  DTGraph dt;
  dt.slice_id = salient.slice_id;
  dt.nodes.reserve(salient.by_word.size());
  for (const auto& [word, feats] : salient.by_word) dt.nodes.push_back(word);
  // by_word is an ordered map, so nodes come out sorted.

  // Inverted index feature -> words; every pair sharing a feature gains one
  // unit of weight, which reproduces the set-intersection definition.
  std::unordered_map<std::string, std::vector<const std::string*>> by_feature;
  for (const auto& [word, feats] : salient.by_word) {
    for (const auto& sf : feats) by_feature[sf.feature].push_back(&word);
  }
  std::unordered_map<std::string, std::unordered_map<std::string, int>> weights;
  for (const auto& [feature, words] : by_feature) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        const std::string* u = words[i];
        const std::string* v = words[j];
        if (*u > *v) std::swap(u, v);
        ++weights[*u][*v];
      }
    }
  }
  for (const auto& word : dt.nodes) dt.adj[word];
  for (const auto& [u, row] : weights) {
    for (const auto& [v, w] : row) {
      dt.adj[u].push_back({v, w});
      dt.adj[v].push_back({u, w});
    }
  }
  for (auto& [word, neighbors] : dt.adj) {
    std::sort(neighbors.begin(), neighbors.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
              });
  }
  return dt;
}

void save_dt(const DTGraph& dt, std::ostream& nodes_out, std::ostream& edges_out) {
  for (const auto& node : dt.nodes) nodes_out << node << '\n';
  for (const auto& node : dt.nodes) {
    auto it = dt.adj.find(node);
    if (it == dt.adj.end()) continue;
    std::vector<std::pair<std::string, int>> forward;
    for (const auto& [neighbor, w] : it->second) {
      if (node < neighbor) forward.push_back({neighbor, w});
    }
    std::sort(forward.begin(), forward.end());
    for (const auto& [neighbor, w] : forward) {
      edges_out << node << '\t' << neighbor << '\t' << w << '\n';
    }
  }
}

DTGraph load_dt(const std::string& slice_id, std::istream& nodes_in,
                std::istream& edges_in) {
  DTGraph dt;
  dt.slice_id = slice_id;
  std::string line;
  while (std::getline(nodes_in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    dt.nodes.push_back(line);
    dt.adj[line];
  }
  std::sort(dt.nodes.begin(), dt.nodes.end());
  std::uint64_t lineno = 0;
  while (std::getline(edges_in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string u, v;
    int w = 0;
    if (!std::getline(fields, u, '\t') || !std::getline(fields, v, '\t') ||
        !(fields >> w) || w < 1) {
      throw ParseError("malformed DT edge line", lineno);
    }
    dt.adj[u].push_back({v, w});
    dt.adj[v].push_back({u, w});
  }
  for (auto& [word, neighbors] : dt.adj) {
    std::sort(neighbors.begin(), neighbors.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
              });
  }
  return dt;
}

void save_dt_files(const DTGraph& dt, const std::string& nodes_path,
                   const std::string& edges_path) {
  std::ofstream nodes_out(nodes_path), edges_out(edges_path);
  if (!nodes_out || !edges_out) {
    throw std::runtime_error("cannot write DT files: " + nodes_path);
  }
  save_dt(dt, nodes_out, edges_out);
}

DTGraph load_dt_files(const std::string& slice_id, const std::string& nodes_path,
                      const std::string& edges_path) {
  std::ifstream nodes_in(nodes_path), edges_in(edges_path);
  if (!nodes_in || !edges_in) {
    throw std::runtime_error("cannot open DT files: " + nodes_path);
  }
  return load_dt(slice_id, nodes_in, edges_in);
}

}  // namespace sensedrift
