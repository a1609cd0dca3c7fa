// sensedrift: detects birth/split/join/death of noun senses by comparing
// sense clusterings induced from per-period distributional thesauri.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sensedrift/pipeline.hpp"

using namespace sensedrift;

namespace {

struct CliOptions {
  std::string config_path;  // consumed by the prescan; bound again for --help
  std::string slices_path;
  std::string weighting_name;
  std::string source;
  std::vector<std::string> targets;
  std::string slice;  // for build-dt / induce
  PipelineConfig config;
};

// Every PipelineConfig field is exposed as a flag of the same name; values
// from --config load first, explicit flags override them.
void add_config_flags(CLI::App* cmd, CliOptions& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config file");
  cmd->add_option("--slices", opts.slices_path,
                  "slice config file (`slice_id start_year end_year` lines)");
  cmd->add_option("--counts", opts.config.counts_path, "count TSV input");
  cmd->add_option("--pos_lexicon", opts.config.pos_lexicon_path, "TSV `word \\t tag`");
  cmd->add_option("--wordnet_data", opts.config.wordnet_data_path, "data.noun path");
  cmd->add_option("--wordnet_index", opts.config.wordnet_index_path, "index.noun path");
  cmd->add_option("--slang", opts.config.slang_path, "slang list, one word per line");
  cmd->add_option("--targets", opts.config.targets_path, "restrict induced words");
  cmd->add_option("--output_dir", opts.config.output_dir, "artifact directory");
  cmd->add_option("--timeline_source", opts.config.timeline_source,
                  "restrict timeline.tsv to one source slice");
  cmd->add_option("--p", opts.config.p, "salient features per word");
  cmd->add_option("--N", opts.config.N, "ego neighborhood size");
  cmd->add_option("--n", opts.config.n, "edges kept per ego node");
  cmd->add_option("--weighting", opts.weighting_name, "top | lin | log");
  cmd->add_option("--max_iterations", opts.config.max_iterations, "CW iteration cap");
  cmd->add_option("--runs", opts.config.runs, "clustering runs per slice");
  cmd->add_option("--birth_threshold", opts.config.thresholds.birth,
                  "novel fraction for birth");
  cmd->add_option("--split_min", opts.config.thresholds.split_min,
                  "per-cluster fraction for split/join");
  cmd->add_option("--split_union", opts.config.thresholds.split_union,
                  "union coverage for split/join (strict >)");
  cmd->add_option("--death_threshold", opts.config.thresholds.death,
                  "vanished fraction for death");
  cmd->add_option("--torso_head", opts.config.torso_head, "top frequency cut");
  cmd->add_option("--torso_tail", opts.config.torso_tail, "bottom frequency cut");
  cmd->add_option("--stable_min", opts.config.stable_min, "detections for stability");
  cmd->add_option("--master_seed", opts.config.master_seed, "pipeline seed");
  cmd->add_option("--workers", opts.config.workers, "0 = hardware concurrency");
  cmd->add_option("--wordnet_depth", opts.config.wordnet_depth,
                  "alignment neighborhood radius");
  cmd->add_flag("--reuse_cached_dt", opts.config.reuse_cached_dt,
                "skip DT build when dt_* files already exist");
  cmd->add_flag("--strict", opts.config.strict_ingest,
                "abort on malformed count lines");
}

PipelineConfig finalize_config(CliOptions& opts) {
  if (!opts.weighting_name.empty()) {
    opts.config.weighting = parse_weighting(opts.weighting_name);
  }
  if (!opts.slices_path.empty()) {
    opts.config.slices = load_slice_config(opts.slices_path);
  }
  opts.config.validate();
  return opts.config;
}

std::optional<std::string> optional_source(const CliOptions& opts) {
  if (opts.source.empty()) return std::nullopt;
  return opts.source;
}

}  // namespace

int main(int argc, char** argv) {
  // Pre-scan for --config so its values become the defaults the real parse
  // overrides.
  CliOptions opts;
  {
    CLI::App prescan;
    prescan.allow_extras();
    prescan.set_help_flag();
    std::string config_path;
    prescan.add_option("--config", config_path);
    try {
      prescan.parse(argc, argv);
    } catch (const CLI::ParseError&) {
      // The real parse reports errors.
    }
    if (!config_path.empty()) {
      try {
        opts.config = PipelineConfig::load(config_path);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
      }
    }
  }

  CLI::App app{
      "Detects noun sense change (birth, split, join, death) across "
      "time-sliced corpora via distributional-thesaurus ego-network "
      "clustering."};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "end-to-end pipeline");
  run->add_option("--source", opts.source, "source slice (default: all pairs)");
  run->add_option("--target", opts.targets, "target slices (default: all later)");
  add_config_flags(run, opts);

  auto* ingest = app.add_subcommand("ingest", "split counts into per-slice tables");
  add_config_flags(ingest, opts);

  auto* build_dt_cmd = app.add_subcommand("build-dt", "DT graph for one slice");
  build_dt_cmd->add_option("--slice", opts.slice, "slice id")->required();
  add_config_flags(build_dt_cmd, opts);

  auto* induce = app.add_subcommand("induce", "sense clusterings for one slice");
  induce->add_option("--slice", opts.slice, "slice id")->required();
  add_config_flags(induce, opts);

  auto* compare = app.add_subcommand("compare", "raw change records for one pair");
  compare->add_option("--source", opts.source, "source slice")->required();
  compare->add_option("--target", opts.targets, "target slice")->required()->expected(1);
  add_config_flags(compare, opts);

  auto* filter = app.add_subcommand("filter", "three-stage filtering for one pair");
  filter->add_option("--source", opts.source, "source slice")->required();
  filter->add_option("--target", opts.targets, "target slice")->required()->expected(1);
  add_config_flags(filter, opts);

  auto* stability = app.add_subcommand("stability", "stability, location and age");
  stability->add_option("--source", opts.source, "restrict to one source slice");
  add_config_flags(stability, opts);

  auto* eval = app.add_subcommand("eval", "WordNet and slang evaluation");
  add_config_flags(eval, opts);

  auto* report = app.add_subcommand("report", "merged changes.jsonl and summary.tsv");
  add_config_flags(report, opts);

  try {
    app.parse(argc, argv);
    CLI::App* active = app.get_subcommands().front();
    PipelineConfig config = finalize_config(opts);

    if (active == run) {
      PipelineResult result = run_pipeline(config, optional_source(opts), opts.targets);
      std::cout << "compared " << result.pairs.size() << " slice pair(s), "
                << result.filtered_records << " filtered change record(s)\n";
    } else if (active == ingest) {
      IngestStats stats = pipeline_ingest(config);
      std::cout << "accepted " << stats.accepted << ", dropped "
                << stats.dropped_out_of_range << ", malformed " << stats.malformed
                << '\n';
    } else if (active == build_dt_cmd) {
      pipeline_build_dt(config, opts.slice);
    } else if (active == induce) {
      pipeline_induce(config, opts.slice);
    } else if (active == compare) {
      pipeline_compare(config, opts.source, opts.targets.front());
    } else if (active == filter) {
      pipeline_filter(config, opts.source, opts.targets.front());
    } else if (active == stability) {
      pipeline_stability(config,
                         select_pairs(config.slices, optional_source(opts), {}));
    } else if (active == eval) {
      pipeline_eval(config, select_pairs(config.slices, std::nullopt, {}));
    } else if (active == report) {
      pipeline_report(config, select_pairs(config.slices, std::nullopt, {}));
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
