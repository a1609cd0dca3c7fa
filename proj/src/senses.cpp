#include "sensedrift/senses.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "sensedrift/hashing.hpp"

namespace sensedrift {

SenseClustering induce_senses(const DTGraph& dt, const std::string& word,
                              const CwParams& params, std::uint64_t master_seed,
                              int run_index) {
  SenseClustering clustering;
  clustering.word = word;
  clustering.slice_id = dt.slice_id;
  clustering.run_index = run_index;
  clustering.seed = derive_seed(master_seed, dt.slice_id, word,
                                static_cast<std::uint64_t>(run_index));

  EgoNetwork ego = extract_ego_network(dt, word, params.N, params.n);
  CwResult cw = chinese_whispers(ego.graph(), params.weighting, clustering.seed,
                                 params.max_iterations);
  for (const auto& cluster : cw.clusters()) {
    std::vector<std::string> members;
    members.reserve(cluster.size());
    for (int node : cluster) members.push_back(ego.nodes[node]);
    std::sort(members.begin(), members.end());
    clustering.clusters.push_back(std::move(members));
  }
  std::stable_sort(clustering.clusters.begin(), clustering.clusters.end(),
                   [](const auto& a, const auto& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });
  return clustering;
}

void save_clusterings(const std::map<std::string, SenseClustering>& by_word,
                      std::ostream& out) {
  for (const auto& [word, clustering] : by_word) {
    nlohmann::json record;
    record["word"] = clustering.word;
    record["slice"] = clustering.slice_id;
    record["run"] = clustering.run_index;
    record["seed"] = clustering.seed;
    record["clusters"] = clustering.clusters;
    out << record.dump() << '\n';
  }
}

std::map<std::string, SenseClustering> load_clusterings(std::istream& in) {
  std::map<std::string, SenseClustering> by_word;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json record = nlohmann::json::parse(line);
    SenseClustering clustering;
    clustering.word = record.at("word").get<std::string>();
    clustering.slice_id = record.at("slice").get<std::string>();
    clustering.run_index = record.at("run").get<int>();
    clustering.seed = record.at("seed").get<std::uint64_t>();
    clustering.clusters =
        record.at("clusters").get<std::vector<std::vector<std::string>>>();
    by_word.emplace(clustering.word, std::move(clustering));
  }
  return by_word;
}

void save_clusterings_file(const std::map<std::string, SenseClustering>& by_word,
                           const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  save_clusterings(by_word, out);
}

std::map<std::string, SenseClustering> load_clusterings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return load_clusterings(in);
}

}  // namespace sensedrift
