#include "sensedrift/tracker.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace sensedrift {

IntersectionMatrix IntersectionMatrix::transposed() const {
  IntersectionMatrix t;
  t.m = n;
  t.n = m;
  t.source_sizes = target_sizes;
  t.target_sizes = source_sizes;
  t.raw.assign(t.m + 1, std::vector<int>(t.n + 1, 0));
  for (int k = 0; k <= m; ++k) {
    for (int l = 0; l <= n; ++l) t.raw[l][k] = raw[k][l];
  }
  t.raw[t.m][t.n] = 0;
  return t;
}

double IntersectionMatrix::novel_fraction(int target) const {
  return static_cast<double>(raw[m][target]) / target_sizes[target];
}

double IntersectionMatrix::vanished_fraction(int source) const {
  return static_cast<double>(raw[source][n]) / source_sizes[source];
}

namespace {

// word -> cluster index; throws unless the clusters form a valid partition
// of their union (disjoint, non-empty).
std::unordered_map<std::string, int> membership(
    const std::vector<std::vector<std::string>>& clusters) {
  std::unordered_map<std::string, int> index;
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    if (clusters[k].empty()) {
      throw std::invalid_argument("intersection_matrix: empty cluster");
    }
    for (const auto& word : clusters[k]) {
      if (!index.emplace(word, static_cast<int>(k)).second) {
        throw std::invalid_argument(
            "intersection_matrix: clusters not disjoint at word " + word);
      }
    }
  }
  return index;
}

}  // namespace

IntersectionMatrix intersection_matrix(
    const std::vector<std::vector<std::string>>& source,
    const std::vector<std::vector<std::string>>& target) {
  auto source_index = membership(source);
  auto target_index = membership(target);

  IntersectionMatrix M;
  M.m = static_cast<int>(source.size());
  M.n = static_cast<int>(target.size());
  M.raw.assign(M.m + 1, std::vector<int>(M.n + 1, 0));
  for (const auto& cluster : source) {
    M.source_sizes.push_back(static_cast<int>(cluster.size()));
  }
  for (const auto& cluster : target) {
    M.target_sizes.push_back(static_cast<int>(cluster.size()));
  }

  for (const auto& [word, l] : target_index) {
    auto it = source_index.find(word);
    ++M.raw[it == source_index.end() ? M.m : it->second][l];
  }
  for (const auto& [word, k] : source_index) {
    if (!target_index.count(word)) ++M.raw[k][M.n];
  }
  return M;
}

std::vector<int> detect_birth(const IntersectionMatrix& M, double birth_threshold) {
  if (!(birth_threshold > 0.0 && birth_threshold <= 1.0)) {
    throw std::invalid_argument("birth_threshold must be in (0,1]");
  }
  std::vector<int> flagged;
  for (int l = 0; l < M.n; ++l) {
    if (M.novel_fraction(l) >= birth_threshold) flagged.push_back(l);
  }
  return flagged;
}

std::vector<int> detect_death(const IntersectionMatrix& M, double death_threshold) {
  if (!(death_threshold > 0.0 && death_threshold <= 1.0)) {
    throw std::invalid_argument("death_threshold must be in (0,1]");
  }
  std::vector<int> flagged;
  for (int k = 0; k < M.m; ++k) {
    if (M.vanished_fraction(k) >= death_threshold) flagged.push_back(k);
  }
  return flagged;
}

std::vector<SplitFlag> detect_split(const IntersectionMatrix& M,
                                    double per_cluster_min, double union_min) {
  if (!(per_cluster_min > 0.0 && per_cluster_min <= 1.0) ||
      !(union_min > 0.0 && union_min <= 1.0)) {
    throw std::invalid_argument("split thresholds must be in (0,1]");
  }
  std::vector<SplitFlag> flags;
  for (int k = 0; k < M.m; ++k) {
    const double size = M.source_sizes[k];
    std::vector<int> qualifying;
    long long covered = 0;
    for (int l = 0; l < M.n; ++l) {
      if (M.raw[k][l] / size >= per_cluster_min) {
        qualifying.push_back(l);
        covered += M.raw[k][l];
      }
    }
    // Targets are disjoint, so the union of the intersections is their sum.
    if (qualifying.size() >= 2 && covered / size > union_min) {
      flags.push_back({k, std::move(qualifying)});
    }
  }
  return flags;
}

std::vector<JoinFlag> detect_join(const IntersectionMatrix& M,
                                  double per_cluster_min, double union_min) {
  std::vector<JoinFlag> flags;
  for (const auto& split : detect_split(M.transposed(), per_cluster_min, union_min)) {
    flags.push_back({split.targets, split.source});
  }
  return flags;
}

std::string change_type_name(ChangeType t) {
  switch (t) {
    case ChangeType::birth: return "birth";
    case ChangeType::split: return "split";
    case ChangeType::join: return "join";
    case ChangeType::death: return "death";
  }
  return "?";
}

ChangeType parse_change_type(const std::string& name) {
  if (name == "birth") return ChangeType::birth;
  if (name == "split") return ChangeType::split;
  if (name == "join") return ChangeType::join;
  if (name == "death") return ChangeType::death;
  throw std::invalid_argument("unknown change type: " + name);
}

std::vector<ChangeRecord> compare_word(const SenseClustering& source,
                                       const SenseClustering& target,
                                       const Thresholds& thresholds) {
  if (source.word != target.word) {
    throw std::invalid_argument("compare_word: clusterings of different words");
  }
  IntersectionMatrix M = intersection_matrix(source.clusters, target.clusters);

  std::vector<ChangeRecord> records;
  auto base = [&](ChangeType type) {
    ChangeRecord r;
    r.word = source.word;
    r.type = type;
    r.source_slice = source.slice_id;
    r.target_slice = target.slice_id;
    r.runs = {source.run_index};
    return r;
  };

  for (int l : detect_birth(M, thresholds.birth)) {
    ChangeRecord r = base(ChangeType::birth);
    r.target_clusters = {l};
    r.cluster_fractions = {M.novel_fraction(l)};
    records.push_back(std::move(r));
  }
  for (const auto& flag : detect_split(M, thresholds.split_min, thresholds.split_union)) {
    ChangeRecord r = base(ChangeType::split);
    r.source_clusters = {flag.source};
    r.target_clusters = flag.targets;
    double covered = 0.0;
    for (int l : flag.targets) {
      double fraction = M.raw[flag.source][l] / static_cast<double>(M.source_sizes[flag.source]);
      r.cluster_fractions.push_back(fraction);
      covered += M.raw[flag.source][l];
    }
    r.union_coverage = covered / M.source_sizes[flag.source];
    records.push_back(std::move(r));
  }
  for (const auto& flag : detect_join(M, thresholds.split_min, thresholds.split_union)) {
    ChangeRecord r = base(ChangeType::join);
    r.source_clusters = flag.sources;
    r.target_clusters = {flag.target};
    double covered = 0.0;
    for (int k : flag.sources) {
      double fraction = M.raw[k][flag.target] / static_cast<double>(M.target_sizes[flag.target]);
      r.cluster_fractions.push_back(fraction);
      covered += M.raw[k][flag.target];
    }
    r.union_coverage = covered / M.target_sizes[flag.target];
    records.push_back(std::move(r));
  }
  for (int k : detect_death(M, thresholds.death)) {
    ChangeRecord r = base(ChangeType::death);
    r.source_clusters = {k};
    r.cluster_fractions = {M.vanished_fraction(k)};
    records.push_back(std::move(r));
  }
  return records;
}

bool change_record_less(const ChangeRecord& a, const ChangeRecord& b) {
  auto key = [](const ChangeRecord& r) {
    return std::tie(r.source_slice, r.target_slice, r.word);
  };
  if (key(a) != key(b)) return key(a) < key(b);
  if (a.type != b.type) return static_cast<int>(a.type) < static_cast<int>(b.type);
  if (a.source_clusters != b.source_clusters) return a.source_clusters < b.source_clusters;
  if (a.target_clusters != b.target_clusters) return a.target_clusters < b.target_clusters;
  return a.runs < b.runs;
}

namespace {

nlohmann::json scores_json(const ChangeRecord& r) {
  nlohmann::json scores;
  switch (r.type) {
    case ChangeType::birth:
      scores["novel_fraction"] = r.cluster_fractions.empty() ? 0.0 : r.cluster_fractions[0];
      break;
    case ChangeType::death:
      scores["vanished_fraction"] = r.cluster_fractions.empty() ? 0.0 : r.cluster_fractions[0];
      break;
    case ChangeType::split:
    case ChangeType::join:
      scores["per_cluster"] = r.cluster_fractions;
      scores["union_coverage"] = r.union_coverage;
      break;
  }
  return scores;
}

}  // namespace

void write_change_records(const std::vector<ChangeRecord>& records, std::ostream& out) {
  std::vector<const ChangeRecord*> ordered;
  ordered.reserve(records.size());
  for (const auto& r : records) ordered.push_back(&r);
  std::sort(ordered.begin(), ordered.end(),
            [](const ChangeRecord* a, const ChangeRecord* b) {
              return change_record_less(*a, *b);
            });
  for (const ChangeRecord* r : ordered) {
    nlohmann::json record;
    record["word"] = r->word;
    record["type"] = change_type_name(r->type);
    record["source_slice"] = r->source_slice;
    record["target_slice"] = r->target_slice;
    record["source_clusters"] = r->source_clusters;
    record["target_clusters"] = r->target_clusters;
    record["scores"] = scores_json(*r);
    record["runs"] = r->runs;
    out << record.dump() << '\n';
  }
}

std::vector<ChangeRecord> read_change_records(std::istream& in) {
  std::vector<ChangeRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    ChangeRecord r;
    r.word = j.at("word").get<std::string>();
    r.type = parse_change_type(j.at("type").get<std::string>());
    r.source_slice = j.at("source_slice").get<std::string>();
    r.target_slice = j.at("target_slice").get<std::string>();
    r.source_clusters = j.at("source_clusters").get<std::vector<int>>();
    r.target_clusters = j.at("target_clusters").get<std::vector<int>>();
    const auto& scores = j.at("scores");
    switch (r.type) {
      case ChangeType::birth:
        r.cluster_fractions = {scores.at("novel_fraction").get<double>()};
        break;
      case ChangeType::death:
        r.cluster_fractions = {scores.at("vanished_fraction").get<double>()};
        break;
      case ChangeType::split:
      case ChangeType::join:
        r.cluster_fractions = scores.at("per_cluster").get<std::vector<double>>();
        r.union_coverage = scores.at("union_coverage").get<double>();
        break;
    }
    r.runs = j.at("runs").get<std::vector<int>>();
    records.push_back(std::move(r));
  }
  return records;
}

void write_change_records_file(const std::vector<ChangeRecord>& records,
                               const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  write_change_records(records, out);
}

std::vector<ChangeRecord> read_change_records_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return read_change_records(in);
}

}  // namespace sensedrift
