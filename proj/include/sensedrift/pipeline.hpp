#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sensedrift/counts.hpp"
#include "sensedrift/filtering.hpp"
#include "sensedrift/senses.hpp"
#include "sensedrift/slices.hpp"
#include "sensedrift/stability.hpp"
#include "sensedrift/tracker.hpp"

namespace sensedrift {

struct PipelineConfig {
  SliceConfig slices = default_slices();

  int p = 1000;  // salient features per word
  int N = 200;   // ego neighborhood size
  int n = 200;   // per-node edge retention inside the ego graph
  Weighting weighting = Weighting::lin;
  int max_iterations = 20;
  int runs = 3;

  Thresholds thresholds;  // birth .8, split_min .3, split_union .8, death .8
  double torso_head = 0.2;
  double torso_tail = 0.2;
  int stable_min = 2;

  std::uint64_t master_seed = 1;
  int workers = 0;             // 0 = hardware concurrency
  bool reuse_cached_dt = false;  // reuse dt_* files already in output_dir
  bool strict_ingest = false;
  int wordnet_depth = 2;

  std::string counts_path;
  std::string pos_lexicon_path;
  std::string wordnet_data_path;
  std::string wordnet_index_path;
  std::string slang_path;
  std::string targets_path;  // optional: restrict induced words
  std::string output_dir;
  std::string timeline_source;  // optional: timeline from one source slice only

  void validate() const;  // throws std::invalid_argument
  static PipelineConfig load(const std::string& json_path);
  void save(const std::string& json_path) const;
};

// Output file locations inside config.output_dir.
struct OutputPaths {
  explicit OutputPaths(const std::string& output_dir);
  std::string dir;
  std::string counts(const std::string& slice) const;
  std::string ingest_stats() const;
  std::string dt_nodes(const std::string& slice) const;
  std::string dt_edges(const std::string& slice) const;
  std::string clusters(const std::string& slice, int run) const;
  std::string raw_changes(const std::string& src, const std::string& tgt) const;
  std::string filtered_changes(const std::string& src, const std::string& tgt) const;
  std::string candidates(const std::string& src, const std::string& tgt) const;
  std::string changes() const;
  std::string summary() const;
  std::string stability() const;
  std::string timeline() const;
  std::string eval_wordnet() const;
  std::string eval_slang() const;
};

// (source, target) comparison pairs: all ordered pairs by default, one
// source's pairs when source_slice is set, or exactly the given targets.
std::vector<std::pair<std::string, std::string>> select_pairs(
    const SliceConfig& slices, const std::optional<std::string>& source_slice,
    const std::vector<std::string>& target_slices);

// Stage entry points; each reads its inputs from and writes its artifacts to
// config.output_dir, so staged CLI invocations and run_pipeline produce
// byte-identical files.
IngestStats pipeline_ingest(const PipelineConfig& config);
void pipeline_build_dt(const PipelineConfig& config, const std::string& slice_id);
void pipeline_induce(const PipelineConfig& config, const std::string& slice_id);
void pipeline_compare(const PipelineConfig& config, const std::string& source,
                      const std::string& target);
void pipeline_filter(const PipelineConfig& config, const std::string& source,
                     const std::string& target);
void pipeline_stability(
    const PipelineConfig& config,
    const std::vector<std::pair<std::string, std::string>>& pairs);
void pipeline_report(const PipelineConfig& config,
                     const std::vector<std::pair<std::string, std::string>>& pairs);
void pipeline_eval(const PipelineConfig& config,
                   const std::vector<std::pair<std::string, std::string>>& pairs);

struct PipelineResult {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::size_t filtered_records = 0;
};

// End to end: ingest, per-slice DT + sense induction, per-pair compare and
// filter, stability, report, and evaluation when WordNet/slang inputs are
// configured. A failing pair is reported and skipped; other pairs proceed.
PipelineResult run_pipeline(const PipelineConfig& config,
                            const std::optional<std::string>& source_slice = {},
                            const std::vector<std::string>& target_slices = {});

// Distinct birth-flagged words per (source, target) pair.
std::map<std::pair<std::string, std::string>, int> birth_summary(
    const std::vector<ChangeRecord>& records);
// Upper-triangular layout: rows = sources, columns = targets.
void write_summary(const SliceConfig& slices,
                   const std::map<std::pair<std::string, std::string>, int>& counts,
                   std::ostream& out);

}  // namespace sensedrift
