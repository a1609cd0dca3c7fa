#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "sensedrift/hashing.hpp"
#include "sensedrift/pipeline.hpp"
#include "sensedrift/tracker.hpp"

namespace testutil {

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("sensedrift_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }
  std::string str(const std::string& name = "") const {
    return name.empty() ? path_.string() : (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Random partition of a random subset of `universe`.
inline std::vector<std::vector<std::string>> random_partition(
    sensedrift::SplitMix64& rng, const std::vector<std::string>& universe) {
  std::vector<std::string> pool = universe;
  rng.shuffle(pool);
  std::size_t take = rng.below(pool.size() + 1);
  pool.resize(take);
  if (pool.empty()) return {};
  std::size_t cluster_count = 1 + rng.below(pool.size());
  std::vector<std::vector<std::string>> clusters(cluster_count);
  for (const auto& word : pool) clusters[rng.below(cluster_count)].push_back(word);
  std::erase_if(clusters, [](const auto& c) { return c.empty(); });
  return clusters;
}

// Nested-loop oracle for the intersection matrix, independent of the
// implementation's membership-map path.
inline sensedrift::IntersectionMatrix brute_force_intersection(
    const std::vector<std::vector<std::string>>& source,
    const std::vector<std::vector<std::string>>& target) {
  sensedrift::IntersectionMatrix M;
  M.m = static_cast<int>(source.size());
  M.n = static_cast<int>(target.size());
  M.raw.assign(M.m + 1, std::vector<int>(M.n + 1, 0));
  for (const auto& c : source) M.source_sizes.push_back(static_cast<int>(c.size()));
  for (const auto& c : target) M.target_sizes.push_back(static_cast<int>(c.size()));
  auto contains = [](const std::vector<std::string>& cluster, const std::string& w) {
    for (const auto& member : cluster) {
      if (member == w) return true;
    }
    return false;
  };
  for (int k = 0; k < M.m; ++k) {
    for (int l = 0; l < M.n; ++l) {
      for (const auto& word : source[k]) {
        if (contains(target[l], word)) ++M.raw[k][l];
      }
    }
  }
  for (int l = 0; l < M.n; ++l) {
    for (const auto& word : target[l]) {
      bool anywhere = false;
      for (const auto& cluster : source) anywhere = anywhere || contains(cluster, word);
      if (!anywhere) ++M.raw[M.m][l];
    }
  }
  for (int k = 0; k < M.m; ++k) {
    for (const auto& word : source[k]) {
      bool anywhere = false;
      for (const auto& cluster : target) anywhere = anywhere || contains(cluster, word);
      if (!anywhere) ++M.raw[k][M.n];
    }
  }
  return M;
}

// --- synthetic corpora -----------------------------------------------------
//
// Count lines are written pairwise: a feature exclusive to words {x, y}
// contributes exactly one unit of DT edge weight between them, so ego-graph
// weight matrices can be planted precisely. A per-word filler feature pins
// c(word) for the torso stage without creating edges.

class CorpusBuilder {
 public:
  // Distinct feature ids per call, so stacked edge() calls on one pair add
  // weight instead of re-counting the same features.
  void edge(const std::string& x, const std::string& y, int weight, int year,
            std::uint64_t side_count = 2) {
    std::string a = x, b = y;
    if (a > b) std::swap(a, b);
    int& next = feature_counter_[a + "~" + b];
    for (int i = 0; i < weight; ++i, ++next) {
      std::string feature = "f:" + a + "~" + b + ":" + std::to_string(next);
      line(x, feature, year, side_count);
      line(y, feature, year, side_count);
    }
  }
  void filler(const std::string& word, std::uint64_t count, int year) {
    line(word, "self:" + word, year, count);
  }
  void clique(const std::vector<std::string>& words, int weight, int year) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i + 1; j < words.size(); ++j) {
        edge(words[i], words[j], weight, year);
      }
    }
  }
  void star(const std::string& hub, const std::vector<std::string>& words,
            int weight, int year) {
    for (const auto& word : words) {
      if (word != hub) edge(hub, word, weight, year);
    }
  }
  std::string tsv() const { return out_.str(); }

 private:
  void line(const std::string& word, const std::string& feature, int year,
            std::uint64_t count) {
    out_ << word << '\t' << feature << '\t' << year << '\t' << count << '\n';
  }
  std::ostringstream out_;
  std::map<std::string, int> feature_counter_;
};

struct BirthCorpus {
  std::string counts_tsv;
  std::string pos_lexicon_tsv;
  std::vector<std::string> planted;
  std::vector<std::string> controls;
  std::vector<std::string> decoys;  // high- and low-frequency shield words
};

// Two slices. Every subject word owns an 8-word community (a uniform clique
// including the subject) present in both slices; planted words and decoys
// additionally gain a 10-word community of brand-new words in the later
// slice, disconnected from the old one inside the ego graph. Decoys bracket
// the planted words in source frequency so the torso cuts fall on them.
inline BirthCorpus make_birth_corpus(int planted_count, int control_count,
                                     int decoys_per_end, int source_year,
                                     int target_year) {
  BirthCorpus corpus;
  CorpusBuilder builder;
  std::ostringstream lexicon;

  auto subject = [&](const std::string& word, std::uint64_t filler,
                     bool gains_new_sense) {
    std::vector<std::string> all;
    for (int i = 0; i < 7; ++i) all.push_back(word + ".old" + std::to_string(i));
    all.push_back(word);
    for (int year : {source_year, target_year}) builder.clique(all, 6, year);
    builder.filler(word, filler, source_year);
    builder.filler(word, filler, target_year);
    lexicon << word << "\tNN\n";
    if (gains_new_sense) {
      std::vector<std::string> novel;
      for (int i = 0; i < 10; ++i) novel.push_back(word + ".new" + std::to_string(i));
      builder.clique(novel, 6, target_year);
      builder.star(word, novel, 6, target_year);
    }
  };

  for (int i = 0; i < decoys_per_end; ++i) {
    std::string word = "decoyhigh" + std::to_string(i);
    corpus.decoys.push_back(word);
    subject(word, 50000 + 10ull * i, true);
  }
  for (int i = 0; i < planted_count; ++i) {
    std::string word = "planted" + std::to_string(i);
    corpus.planted.push_back(word);
    subject(word, 2000 + 10ull * i, true);
  }
  for (int i = 0; i < decoys_per_end; ++i) {
    std::string word = "decoylow" + std::to_string(i);
    corpus.decoys.push_back(word);
    subject(word, 300 + 10ull * i, true);
  }
  for (int i = 0; i < control_count; ++i) {
    std::string word = "control" + std::to_string(i);
    corpus.controls.push_back(word);
    subject(word, 1000 + 10ull * i, false);
  }

  corpus.counts_tsv = builder.tsv();
  corpus.pos_lexicon_tsv = lexicon.str();
  return corpus;
}

struct SplitJoinCorpus {
  std::string counts_tsv;
  std::string pos_lexicon_tsv;
  std::string split_word;
  std::string join_word;
};

// splitter: one 16-member community in the source slice (uniform clique
// with one anchor member whose edges are twice as strong, which makes CW
// collapse it to a single cluster on every seed) that separates into two
// anchored 8-cliques in the target slice. joiner: the mirror construction.
inline SplitJoinCorpus make_splitjoin_corpus(int source_year, int target_year) {
  SplitJoinCorpus corpus;
  corpus.split_word = "splitter";
  corpus.join_word = "joiner";
  CorpusBuilder builder;

  auto community = [&](const std::string& word, const std::string& side, int count) {
    std::vector<std::string> members;
    for (int i = 0; i < count; ++i) {
      members.push_back(word + "." + side + std::to_string(i));
    }
    return members;
  };
  auto merged_phase = [&](const std::string& word, const std::vector<std::string>& a,
                          const std::vector<std::string>& b, int year) {
    std::vector<std::string> all = a;
    all.insert(all.end(), b.begin(), b.end());
    builder.clique(all, 4, year);
    builder.star(a.front(), all, 4, year);  // anchor doubles its edges
    builder.star(word, all, 6, year);
  };
  auto separate_phase = [&](const std::string& word, const std::vector<std::string>& a,
                            const std::vector<std::string>& b, int year) {
    builder.clique(a, 4, year);
    builder.star(a.front(), a, 4, year);
    builder.clique(b, 4, year);
    builder.star(b.front(), b, 4, year);
    std::vector<std::string> all = a;
    all.insert(all.end(), b.begin(), b.end());
    builder.star(word, all, 6, year);
  };

  auto split_a = community(corpus.split_word, "a", 8);
  auto split_b = community(corpus.split_word, "b", 8);
  merged_phase(corpus.split_word, split_a, split_b, source_year);
  separate_phase(corpus.split_word, split_a, split_b, target_year);

  auto join_a = community(corpus.join_word, "a", 8);
  auto join_b = community(corpus.join_word, "b", 8);
  separate_phase(corpus.join_word, join_a, join_b, source_year);
  merged_phase(corpus.join_word, join_a, join_b, target_year);

  builder.filler(corpus.split_word, 500, source_year);
  builder.filler(corpus.join_word, 600, source_year);

  corpus.counts_tsv = builder.tsv();
  corpus.pos_lexicon_tsv =
      corpus.split_word + "\tNN\n" + corpus.join_word + "\tNN\n";
  return corpus;
}

inline sensedrift::PipelineConfig two_slice_config(const TempDir& dir,
                                                   const std::string& counts_tsv,
                                                   const std::string& lexicon_tsv) {
  sensedrift::PipelineConfig config;
  config.slices = sensedrift::SliceConfig{{{"S1", 1800, 1950}, {"S2", 1951, 2100}}};
  config.counts_path = dir.str("counts.tsv");
  config.pos_lexicon_path = dir.str("pos.tsv");
  config.output_dir = dir.str("out");
  write_file(config.counts_path, counts_tsv);
  write_file(config.pos_lexicon_path, lexicon_tsv);
  return config;
}

}  // namespace testutil
