#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "sensedrift/counts.hpp"

namespace sensedrift {

struct ScoredFeature {
  std::string feature;
  double lmi = 0.0;
};

// Per word, at most `p` features with LMI > 0, in (-LMI, feature) order.
struct SalientFeatures {
  std::string slice_id;
  std::map<std::string, std::vector<ScoredFeature>> by_word;
};

// Distributional thesaurus of one slice: nodes are words, an edge carries
// the number of salient features the two words share (>= 1).
struct DTGraph {
  std::string slice_id;
  std::vector<std::string> nodes;  // sorted
  // word -> (neighbor, shared-feature count), sorted by (-weight, neighbor)
  std::unordered_map<std::string, std::vector<std::pair<std::string, int>>> adj;

  bool has_node(const std::string& word) const { return adj.count(word) > 0; }
  std::size_t edge_count() const;
  int weight(const std::string& u, const std::string& v) const;  // 0 if absent
};

SalientFeatures rank_features(const TimeSlicedCounts& counts,
                              const std::string& slice_id, std::size_t p);
SalientFeatures rank_features(const SliceCounts& counts,
                              const std::string& slice_id, std::size_t p);

DTGraph build_dt(const SalientFeatures& salient);

// Node list (one word per line) plus edge TSV `word1 \t word2 \t weight`
// with word1 < word2; the round trip is lossless including isolated nodes.
void save_dt(const DTGraph& dt, std::ostream& nodes_out, std::ostream& edges_out);
DTGraph load_dt(const std::string& slice_id, std::istream& nodes_in,
                std::istream& edges_in);
void save_dt_files(const DTGraph& dt, const std::string& nodes_path,
                   const std::string& edges_path);
DTGraph load_dt_files(const std::string& slice_id, const std::string& nodes_path,
                      const std::string& edges_path);

}  // namespace sensedrift
