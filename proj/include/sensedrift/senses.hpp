#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sensedrift/chinese_whispers.hpp"
#include "sensedrift/dt.hpp"
#include "sensedrift/ego.hpp"

namespace sensedrift {

struct CwParams {
  int N = 200;
  int n = 200;
  Weighting weighting = Weighting::lin;
  int max_iterations = 20;
};

// Partition of one word's ego network for one (slice, run). Clusters are
// sorted members, ordered by (size desc, smallest member).
struct SenseClustering {
  std::string word;
  std::string slice_id;
  int run_index = 0;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::string>> clusters;
};

// extract_ego_network + chinese_whispers with the per-run seed
// derive_seed(master_seed, dt.slice_id, word, run_index). Deterministic in
// its arguments. Throws std::out_of_range if word is not a DT node.
SenseClustering induce_senses(const DTGraph& dt, const std::string& word,
                              const CwParams& params, std::uint64_t master_seed,
                              int run_index);

// JSONL, one record per word:
// {"word":..,"slice":..,"run":..,"seed":..,"clusters":[[...],...]}
void save_clusterings(const std::map<std::string, SenseClustering>& by_word,
                      std::ostream& out);
std::map<std::string, SenseClustering> load_clusterings(std::istream& in);
void save_clusterings_file(const std::map<std::string, SenseClustering>& by_word,
                           const std::string& path);
std::map<std::string, SenseClustering> load_clusterings_file(const std::string& path);

}  // namespace sensedrift
