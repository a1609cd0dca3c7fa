#include "sensedrift/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "sensedrift/wordnet.hpp"

namespace fs = std::filesystem;

namespace sensedrift {

namespace {

void check_fraction(double value, const std::string& name) {
  if (!(value > 0.0 && value <= 1.0)) {
    throw std::invalid_argument("config: " + name + " must be in (0,1]");
  }
}

void check_positive(int value, const std::string& name) {
  if (value < 1) {
    throw std::invalid_argument("config: " + name + " must be >= 1");
  }
}

// Index-sharded loop with deterministic result slots; scheduling never
// affects output because task i writes only position i.
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& body) {
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
  }
  workers = std::min<int>(workers, static_cast<int>(count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> guard(error_mutex);
          if (!error) error = std::current_exception();
          next.store(count);
          break;
        }
      }
    });
  }
  for (auto& thread : pool) thread.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

void PipelineConfig::validate() const {
  auto violations = validate_slices(slices);
  if (!violations.empty()) {
    throw std::invalid_argument("config: " + violations.front());
  }
  if (slices.slices.empty()) throw std::invalid_argument("config: no slices");
  check_positive(p, "p");
  check_positive(N, "N");
  check_positive(n, "n");
  check_positive(max_iterations, "max_iterations");
  check_positive(runs, "runs");
  check_positive(stable_min, "stable_min");
  check_fraction(thresholds.birth, "birth_threshold");
  check_fraction(thresholds.split_min, "split_min");
  check_fraction(thresholds.split_union, "split_union");
  check_fraction(thresholds.death, "death_threshold");
  check_fraction(torso_head, "torso_head");
  check_fraction(torso_tail, "torso_tail");
  if (torso_head + torso_tail >= 1.0) {
    throw std::invalid_argument("config: torso_head + torso_tail must be < 1");
  }
  if (workers < 0) throw std::invalid_argument("config: workers must be >= 0");
  if (wordnet_depth < 0) throw std::invalid_argument("config: wordnet_depth must be >= 0");
  if (!timeline_source.empty() && !slices.index_of(timeline_source)) {
    throw std::invalid_argument("config: timeline_source is not a slice id");
  }
}

PipelineConfig PipelineConfig::load(const std::string& json_path) {
  std::ifstream in(json_path);
  if (!in) throw std::runtime_error("cannot open config: " + json_path);
  nlohmann::json j = nlohmann::json::parse(in);

  PipelineConfig config;
  if (j.contains("slices")) {
    config.slices.slices.clear();
    for (const auto& entry : j.at("slices")) {
      config.slices.slices.push_back({entry.at(0).get<std::string>(),
                                      entry.at(1).get<int>(),
                                      entry.at(2).get<int>()});
    }
  }
  auto get = [&](const char* key, auto& into) {
    if (j.contains(key)) into = j.at(key).get<std::decay_t<decltype(into)>>();
  };
  get("p", config.p);
  get("N", config.N);
  get("n", config.n);
  if (j.contains("weighting")) {
    config.weighting = parse_weighting(j.at("weighting").get<std::string>());
  }
  get("max_iterations", config.max_iterations);
  get("runs", config.runs);
  get("birth_threshold", config.thresholds.birth);
  get("split_min", config.thresholds.split_min);
  get("split_union", config.thresholds.split_union);
  get("death_threshold", config.thresholds.death);
  get("torso_head", config.torso_head);
  get("torso_tail", config.torso_tail);
  get("stable_min", config.stable_min);
  get("master_seed", config.master_seed);
  get("workers", config.workers);
  get("reuse_cached_dt", config.reuse_cached_dt);
  get("strict_ingest", config.strict_ingest);
  get("wordnet_depth", config.wordnet_depth);
  get("counts", config.counts_path);
  get("pos_lexicon", config.pos_lexicon_path);
  get("wordnet_data", config.wordnet_data_path);
  get("wordnet_index", config.wordnet_index_path);
  get("slang", config.slang_path);
  get("targets", config.targets_path);
  get("output_dir", config.output_dir);
  get("timeline_source", config.timeline_source);
  return config;
}

void PipelineConfig::save(const std::string& json_path) const {
  nlohmann::json j;
  nlohmann::json slice_list = nlohmann::json::array();
  for (const auto& s : slices.slices) {
    slice_list.push_back({s.id, s.start_year, s.end_year});
  }
  j["slices"] = slice_list;
  j["p"] = p;
  j["N"] = N;
  j["n"] = n;
  j["weighting"] = weighting_name(weighting);
  j["max_iterations"] = max_iterations;
  j["runs"] = runs;
  j["birth_threshold"] = thresholds.birth;
  j["split_min"] = thresholds.split_min;
  j["split_union"] = thresholds.split_union;
  j["death_threshold"] = thresholds.death;
  j["torso_head"] = torso_head;
  j["torso_tail"] = torso_tail;
  j["stable_min"] = stable_min;
  j["master_seed"] = master_seed;
  j["workers"] = workers;
  j["reuse_cached_dt"] = reuse_cached_dt;
  j["strict_ingest"] = strict_ingest;
  j["wordnet_depth"] = wordnet_depth;
  j["counts"] = counts_path;
  j["pos_lexicon"] = pos_lexicon_path;
  j["wordnet_data"] = wordnet_data_path;
  j["wordnet_index"] = wordnet_index_path;
  j["slang"] = slang_path;
  j["targets"] = targets_path;
  j["output_dir"] = output_dir;
  j["timeline_source"] = timeline_source;
  std::ofstream out(json_path);
  if (!out) throw std::runtime_error("cannot write config: " + json_path);
  out << j.dump(2) << '\n';
}

OutputPaths::OutputPaths(const std::string& output_dir) : dir(output_dir) {}

static std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

std::string OutputPaths::counts(const std::string& slice) const {
  return join(dir, "counts_" + slice + ".tsv");
}
std::string OutputPaths::ingest_stats() const { return join(dir, "ingest_stats.json"); }
std::string OutputPaths::dt_nodes(const std::string& slice) const {
  return join(dir, "dt_" + slice + "_nodes.txt");
}
std::string OutputPaths::dt_edges(const std::string& slice) const {
  return join(dir, "dt_" + slice + "_edges.tsv");
}
std::string OutputPaths::clusters(const std::string& slice, int run) const {
  return join(dir, "clusters_" + slice + "_run" + std::to_string(run) + ".jsonl");
}
std::string OutputPaths::raw_changes(const std::string& src, const std::string& tgt) const {
  return join(dir, "changes_raw_" + src + "_" + tgt + ".jsonl");
}
std::string OutputPaths::filtered_changes(const std::string& src, const std::string& tgt) const {
  return join(dir, "changes_" + src + "_" + tgt + ".jsonl");
}
std::string OutputPaths::candidates(const std::string& src, const std::string& tgt) const {
  return join(dir, "candidates_" + src + "_" + tgt + ".tsv");
}
std::string OutputPaths::changes() const { return join(dir, "changes.jsonl"); }
std::string OutputPaths::summary() const { return join(dir, "summary.tsv"); }
std::string OutputPaths::stability() const { return join(dir, "stability.tsv"); }
std::string OutputPaths::timeline() const { return join(dir, "timeline.tsv"); }
std::string OutputPaths::eval_wordnet() const { return join(dir, "eval_wordnet.tsv"); }
std::string OutputPaths::eval_slang() const { return join(dir, "eval_slang.tsv"); }

std::vector<std::pair<std::string, std::string>> select_pairs(
    const SliceConfig& slices, const std::optional<std::string>& source_slice,
    const std::vector<std::string>& target_slices) {
  auto ids = slices.ids();
  auto index_of = [&](const std::string& id) {
    auto idx = slices.index_of(id);
    if (!idx) throw std::invalid_argument("unknown slice: " + id);
    return *idx;
  };
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!source_slice) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        pairs.push_back({ids[i], ids[j]});
      }
    }
    return pairs;
  }
  std::size_t src = index_of(*source_slice);
  if (target_slices.empty()) {
    for (std::size_t j = src + 1; j < ids.size(); ++j) pairs.push_back({ids[src], ids[j]});
    return pairs;
  }
  for (const auto& target : target_slices) {
    if (index_of(target) <= src) {
      throw std::invalid_argument("target slice " + target + " does not follow " +
                                  *source_slice);
    }
    pairs.push_back({ids[src], target});
  }
  return pairs;
}

IngestStats pipeline_ingest(const PipelineConfig& config) {
  OutputPaths out(config.output_dir);
  fs::create_directories(out.dir);
  IngestStats stats;
  TimeSlicedCounts counts =
      load_counts(config.counts_path, config.slices, config.strict_ingest, &stats);
  for (const auto& slice : config.slices.slices) {
    save_slice_counts_file(counts.slice(slice.id), out.counts(slice.id));
  }
  nlohmann::json j;
  j["lines_total"] = stats.lines_total;
  j["comment_lines"] = stats.comment_lines;
  j["accepted"] = stats.accepted;
  j["dropped_out_of_range"] = stats.dropped_out_of_range;
  j["malformed"] = stats.malformed;
  std::ofstream stats_out(out.ingest_stats());
  stats_out << j.dump(2) << '\n';
  return stats;
}

void pipeline_build_dt(const PipelineConfig& config, const std::string& slice_id) {
  OutputPaths out(config.output_dir);
  if (config.reuse_cached_dt && fs::exists(out.dt_nodes(slice_id)) &&
      fs::exists(out.dt_edges(slice_id))) {
    return;
  }
  SliceCounts counts = load_slice_counts_file(out.counts(slice_id));
  SalientFeatures salient =
      rank_features(counts, slice_id, static_cast<std::size_t>(config.p));
  DTGraph dt = build_dt(salient);
  save_dt_files(dt, out.dt_nodes(slice_id), out.dt_edges(slice_id));
}

namespace {

std::vector<std::string> induction_words(const PipelineConfig& config, const DTGraph& dt) {
  if (config.targets_path.empty()) return dt.nodes;
  std::set<std::string> targets = load_word_list(config.targets_path);
  std::vector<std::string> words;
  for (const auto& node : dt.nodes) {
    if (targets.count(ascii_lower(node)) || targets.count(ascii_lower(base_word(node)))) {
      words.push_back(node);
    }
  }
  return words;
}

}  // namespace

void pipeline_induce(const PipelineConfig& config, const std::string& slice_id) {
  OutputPaths out(config.output_dir);
  DTGraph dt = load_dt_files(slice_id, out.dt_nodes(slice_id), out.dt_edges(slice_id));
  CwParams params{config.N, config.n, config.weighting, config.max_iterations};
  std::vector<std::string> words = induction_words(config, dt);
  for (int run = 0; run < config.runs; ++run) {
    std::vector<SenseClustering> results(words.size());
    parallel_for(words.size(), config.workers, [&](std::size_t i) {
      results[i] = induce_senses(dt, words[i], params, config.master_seed, run);
    });
    std::map<std::string, SenseClustering> by_word;
    for (auto& clustering : results) {
      by_word.emplace(clustering.word, std::move(clustering));
    }
    save_clusterings_file(by_word, out.clusters(slice_id, run));
  }
}

void pipeline_compare(const PipelineConfig& config, const std::string& source,
                      const std::string& target) {
  OutputPaths out(config.output_dir);
  std::vector<ChangeRecord> records;
  for (int run = 0; run < config.runs; ++run) {
    auto source_clusterings = load_clusterings_file(out.clusters(source, run));
    auto target_clusterings = load_clusterings_file(out.clusters(target, run));
    for (const auto& [word, source_clustering] : source_clusterings) {
      auto it = target_clusterings.find(word);
      if (it == target_clusterings.end()) continue;
      auto found = compare_word(source_clustering, it->second, config.thresholds);
      for (auto& record : found) {
        record.runs = {run};
        records.push_back(std::move(record));
      }
    }
  }
  write_change_records_file(records, out.raw_changes(source, target));
}

void pipeline_filter(const PipelineConfig& config, const std::string& source,
                     const std::string& target) {
  OutputPaths out(config.output_dir);
  std::vector<ChangeRecord> raw = read_change_records_file(out.raw_changes(source, target));

  std::vector<CandidateList> run_lists;
  for (int run = 0; run < config.runs; ++run) {
    std::vector<ChangeRecord> of_run;
    for (const auto& record : raw) {
      if (!record.runs.empty() && record.runs.front() == run) of_run.push_back(record);
    }
    run_lists.push_back(candidates_from_records(source, target, of_run));
  }
  CandidateList list = stage1_intersect(run_lists);

  PosLexicon lexicon;
  if (!config.pos_lexicon_path.empty()) lexicon = load_pos_lexicon(config.pos_lexicon_path);
  list = stage2_pos_filter(list, lexicon);

  SliceCounts source_counts = load_slice_counts_file(out.counts(source));
  list = stage3_torso(list, source_counts.word_count, config.torso_head,
                      config.torso_tail);

  std::ofstream candidates_out(out.candidates(source, target));
  if (!candidates_out) {
    throw std::runtime_error("cannot write: " + out.candidates(source, target));
  }
  candidates_out << "# word\ttype\n";
  std::vector<ChangeRecord> filtered;
  for (const auto& [key, entry_records] : list.entries) {
    candidates_out << key.first << '\t' << change_type_name(key.second) << '\n';
    filtered.insert(filtered.end(), entry_records.begin(), entry_records.end());
  }
  write_change_records_file(filtered, out.filtered_changes(source, target));
}

namespace {

std::vector<ChangeRecord> read_pair_records(
    const OutputPaths& out,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<ChangeRecord> all;
  for (const auto& [source, target] : pairs) {
    std::string path = out.filtered_changes(source, target);
    if (!fs::exists(path)) continue;  // pair not compared
    auto records = read_change_records_file(path);
    all.insert(all.end(), records.begin(), records.end());
  }
  return all;
}

}  // namespace

void pipeline_stability(
    const PipelineConfig& config,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  OutputPaths out(config.output_dir);
  std::vector<ChangeRecord> records = read_pair_records(out, pairs);

  auto slice_ids = config.slices.ids();
  std::unordered_map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < slice_ids.size(); ++i) order[slice_ids[i]] = i;

  // (source, word, type) -> target slices in chronological order
  std::map<std::tuple<std::string, std::string, ChangeType>, std::set<std::size_t>> detected;
  for (const auto& record : records) {
    detected[{record.source_slice, record.word, record.type}].insert(
        order.at(record.target_slice));
  }

  std::ofstream stability_out(out.stability());
  if (!stability_out) throw std::runtime_error("cannot write: " + out.stability());
  stability_out << "# word\ttype\tsource_slice\tlocation\tage\tstable\n";

  // Ordered by source slice, then word, then type for stable output.
  std::vector<std::tuple<std::size_t, std::string, ChangeType, StabilityVerdict>> verdicts;
  for (const auto& [key, target_indices] : detected) {
    const auto& [source, word, type] = key;
    DetectionSeries series;
    series.word = word;
    series.type = type;
    series.source_slice = source;
    for (std::size_t idx : target_indices) series.detected_targets.push_back(slice_ids[idx]);
    StabilityVerdict verdict = assess(series, config.stable_min);
    verdicts.push_back({order.at(source), word, type, verdict});
  }
  std::sort(verdicts.begin(), verdicts.end(),
            [](const auto& a, const auto& b) {
              if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
              if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
              return static_cast<int>(std::get<2>(a)) < static_cast<int>(std::get<2>(b));
            });
  for (const auto& [source_idx, word, type, verdict] : verdicts) {
    stability_out << word << '\t' << change_type_name(type) << '\t'
                  << slice_ids[source_idx] << '\t' << verdict.location << '\t'
                  << verdict.age << '\t' << (verdict.stable ? 1 : 0) << '\n';
  }

  // Timeline: stable birth senses. With several source slices reporting the
  // same word, the earliest location (then earliest source) represents it.
  std::map<std::string, std::pair<std::size_t, StabilityVerdict>> per_word;
  for (const auto& [source_idx, word, type, verdict] : verdicts) {
    if (type != ChangeType::birth || !verdict.stable) continue;
    if (!config.timeline_source.empty() &&
        slice_ids[source_idx] != config.timeline_source) {
      continue;
    }
    auto it = per_word.find(word);
    std::size_t location_idx = order.at(verdict.location);
    if (it == per_word.end() ||
        location_idx < order.at(it->second.second.location) ||
        (location_idx == order.at(it->second.second.location) &&
         source_idx < it->second.first)) {
      per_word[word] = {source_idx, verdict};
    }
  }
  std::vector<std::pair<std::string, StabilityVerdict>> timeline_input;
  for (const auto& [word, entry] : per_word) timeline_input.push_back({word, entry.second});
  auto rows = timeline(timeline_input, slice_ids);
  std::ofstream timeline_out(out.timeline());
  if (!timeline_out) throw std::runtime_error("cannot write: " + out.timeline());
  write_timeline(rows, timeline_out);
}

std::map<std::pair<std::string, std::string>, int> birth_summary(
    const std::vector<ChangeRecord>& records) {
  std::map<std::pair<std::string, std::string>, std::set<std::string>> words;
  for (const auto& record : records) {
    if (record.type != ChangeType::birth) continue;
    words[{record.source_slice, record.target_slice}].insert(record.word);
  }
  std::map<std::pair<std::string, std::string>, int> counts;
  for (const auto& [pair, word_set] : words) {
    counts[pair] = static_cast<int>(word_set.size());
  }
  return counts;
}

void write_summary(const SliceConfig& slices,
                   const std::map<std::pair<std::string, std::string>, int>& counts,
                   std::ostream& out) {
  auto ids = slices.ids();
  if (ids.size() < 2) {
    out << "# birth candidates: need at least two slices\n";
    return;
  }
  out << "# src\\tgt";
  for (std::size_t j = 1; j < ids.size(); ++j) out << '\t' << ids[j];
  out << '\n';
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    out << ids[i];
    for (std::size_t j = 1; j < ids.size(); ++j) {
      out << '\t';
      if (j <= i) continue;  // lower triangle stays blank
      auto it = counts.find({ids[i], ids[j]});
      out << (it == counts.end() ? 0 : it->second);
    }
    out << '\n';
  }
}

void pipeline_report(const PipelineConfig& config,
                     const std::vector<std::pair<std::string, std::string>>& pairs) {
  OutputPaths out(config.output_dir);
  std::vector<ChangeRecord> records = read_pair_records(out, pairs);
  write_change_records_file(records, out.changes());
  std::ofstream summary_out(out.summary());
  if (!summary_out) throw std::runtime_error("cannot write: " + out.summary());
  write_summary(config.slices, birth_summary(records), summary_out);
}

void pipeline_eval(const PipelineConfig& config,
                   const std::vector<std::pair<std::string, std::string>>& pairs) {
  OutputPaths out(config.output_dir);
  std::vector<ChangeRecord> records = read_pair_records(out, pairs);

  // Slang overlap over the distinct filtered birth words.
  if (!config.slang_path.empty()) {
    std::set<std::string> birth_words;
    for (const auto& record : records) {
      if (record.type == ChangeType::birth) {
        birth_words.insert(ascii_lower(base_word(record.word)));
      }
    }
    auto overlap = slang_overlap(birth_words, load_word_list(config.slang_path));
    std::ofstream slang_out(out.eval_slang());
    if (!slang_out) throw std::runtime_error("cannot write: " + out.eval_slang());
    slang_out << "# slang birth words\n";
    for (const auto& word : overlap) slang_out << word << '\n';
  }

  if (config.wordnet_data_path.empty() || config.wordnet_index_path.empty()) return;
  WordNetGraph wn = load_wordnet(config.wordnet_data_path, config.wordnet_index_path);

  // Clusterings are loaded lazily per (slice, run).
  std::map<std::pair<std::string, int>, std::map<std::string, SenseClustering>> cache;
  auto clustering_of = [&](const std::string& slice, int run,
                           const std::string& word) -> const SenseClustering& {
    auto key = std::make_pair(slice, run);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, load_clusterings_file(out.clusters(slice, run))).first;
    }
    return it->second.at(word);
  };
  auto align = [&](const std::vector<std::string>& cluster, const std::string& target) {
    std::vector<std::string> bare;
    bare.reserve(cluster.size());
    for (const auto& word : cluster) bare.push_back(base_word(word));
    return align_cluster(bare, base_word(target), wn, config.wordnet_depth);
  };

  std::ofstream eval_out(out.eval_wordnet());
  if (!eval_out) throw std::runtime_error("cannot write: " + out.eval_wordnet());
  eval_out << "# word\ttype\tsource_slice\ttarget_slice\tsuccess\tdetail\n";

  std::vector<const ChangeRecord*> ordered;
  for (const auto& record : records) {
    if (record.type == ChangeType::birth || record.type == ChangeType::split ||
        record.type == ChangeType::join) {
      // Evaluate run-0 records; stage 1 guarantees every kept entry has one.
      if (!record.runs.empty() && record.runs.front() == 0) ordered.push_back(&record);
    }
  }
  std::sort(ordered.begin(), ordered.end(), [](const ChangeRecord* a, const ChangeRecord* b) {
    return change_record_less(*a, *b);
  });

  for (const ChangeRecord* record : ordered) {
    if (!wn.has_lemma(base_word(record->word))) {
      eval_out << record->word << '\t' << change_type_name(record->type) << '\t'
               << record->source_slice << '\t' << record->target_slice
               << "\tna\tlemma not in wordnet\n";
      continue;
    }
    int run = record->runs.front();
    const SenseClustering& source_clustering =
        clustering_of(record->source_slice, run, record->word);
    const SenseClustering& target_clustering =
        clustering_of(record->target_slice, run, record->word);

    bool success = false;
    std::string detail;
    switch (record->type) {
      case ChangeType::birth: {
        std::set<std::string> initial;
        for (const auto& cluster : source_clustering.clusters) {
          initial.insert(align(cluster, record->word).synset_id);
        }
        std::string born =
            align(target_clustering.clusters.at(record->target_clusters.at(0)),
                  record->word)
                .synset_id;
        success = judge_birth(initial, born);
        detail = "s_new=" + born;
        break;
      }
      case ChangeType::split: {
        std::string old_id =
            align(source_clustering.clusters.at(record->source_clusters.at(0)),
                  record->word)
                .synset_id;
        std::vector<std::string> target_ids;
        for (int l : record->target_clusters) {
          target_ids.push_back(align(target_clustering.clusters.at(l), record->word).synset_id);
        }
        success = judge_split(old_id, target_ids);
        detail = "s_old=" + old_id;
        break;
      }
      case ChangeType::join: {
        std::vector<std::string> source_ids;
        for (int k : record->source_clusters) {
          source_ids.push_back(align(source_clustering.clusters.at(k), record->word).synset_id);
        }
        std::string joined =
            align(target_clustering.clusters.at(record->target_clusters.at(0)),
                  record->word)
                .synset_id;
        success = judge_join(source_ids, joined);
        detail = "s_new=" + joined;
        break;
      }
      default:
        break;
    }
    eval_out << record->word << '\t' << change_type_name(record->type) << '\t'
             << record->source_slice << '\t' << record->target_slice << '\t'
             << (success ? 1 : 0) << '\t' << detail << '\n';
  }
}

PipelineResult run_pipeline(const PipelineConfig& config,
                            const std::optional<std::string>& source_slice,
                            const std::vector<std::string>& target_slices) {
  config.validate();
  PipelineResult result;
  result.pairs = select_pairs(config.slices, source_slice, target_slices);

  pipeline_ingest(config);

  std::set<std::string> needed;
  for (const auto& [source, target] : result.pairs) {
    needed.insert(source);
    needed.insert(target);
  }
  for (const auto& slice : config.slices.ids()) {
    if (!needed.count(slice)) continue;
    pipeline_build_dt(config, slice);
    pipeline_induce(config, slice);
  }

  std::vector<std::pair<std::string, std::string>> completed;
  for (const auto& [source, target] : result.pairs) {
    try {
      pipeline_compare(config, source, target);
      pipeline_filter(config, source, target);
      completed.push_back({source, target});
    } catch (const std::exception& e) {
      std::cerr << "pair " << source << "," << target << " failed: " << e.what()
                << '\n';
    }
  }

  pipeline_stability(config, completed);
  pipeline_report(config, completed);
  if (!config.slang_path.empty() ||
      (!config.wordnet_data_path.empty() && !config.wordnet_index_path.empty())) {
    pipeline_eval(config, completed);
  }

  OutputPaths out(config.output_dir);
  result.filtered_records = read_pair_records(out, completed).size();
  return result;
}

}  // namespace sensedrift
