#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "sensedrift/pipeline.hpp"
#include "testutil.hpp"

using namespace sensedrift;
namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
  std::string command = std::string(SENSEDRIFT_BIN) + " " + args + " >/dev/null 2>&1";
  return std::system(command.c_str());
}

}  // namespace

TEST_CASE("cli run produces the full artifact set") {
  testutil::TempDir dir("cli_run");
  auto corpus = testutil::make_splitjoin_corpus(1900, 2000);
  testutil::write_file(dir.str("counts.tsv"), corpus.counts_tsv);
  testutil::write_file(dir.str("pos.tsv"), corpus.pos_lexicon_tsv);
  testutil::write_file(dir.str("slices.txt"), "S1 1800 1950\nS2 1951 2100\n");

  std::string base = "--slices " + dir.str("slices.txt") + " --counts " +
                     dir.str("counts.tsv") + " --pos_lexicon " + dir.str("pos.tsv") +
                     " --output_dir " + dir.str("out") + " --master_seed 7";
  REQUIRE(run_cli("run " + base) == 0);

  OutputPaths out(dir.str("out"));
  CHECK(fs::exists(out.candidates("S1", "S2")));
  CHECK(fs::exists(out.changes()));
  CHECK(fs::exists(out.summary()));
  CHECK(fs::exists(out.timeline()));

  std::string candidates = testutil::read_file(out.candidates("S1", "S2"));
  CHECK(candidates.find("splitter\tsplit") != std::string::npos);
  CHECK(candidates.find("joiner\tjoin") != std::string::npos);
}

TEST_CASE("cli staged subcommands replicate run byte for byte") {
  auto corpus = testutil::make_splitjoin_corpus(1900, 2000);

  testutil::TempDir dir("cli_staged");
  testutil::write_file(dir.str("counts.tsv"), corpus.counts_tsv);
  testutil::write_file(dir.str("pos.tsv"), corpus.pos_lexicon_tsv);
  testutil::write_file(dir.str("slices.txt"), "S1 1800 1950\nS2 1951 2100\n");

  auto base = [&](const std::string& out_dir) {
    return "--slices " + dir.str("slices.txt") + " --counts " + dir.str("counts.tsv") +
           " --pos_lexicon " + dir.str("pos.tsv") + " --output_dir " +
           dir.str(out_dir) + " --master_seed 3";
  };
  REQUIRE(run_cli("run " + base("full")) == 0);

  REQUIRE(run_cli("ingest " + base("staged")) == 0);
  REQUIRE(run_cli("build-dt --slice S1 " + base("staged")) == 0);
  REQUIRE(run_cli("build-dt --slice S2 " + base("staged")) == 0);
  REQUIRE(run_cli("induce --slice S1 " + base("staged")) == 0);
  REQUIRE(run_cli("induce --slice S2 " + base("staged")) == 0);
  REQUIRE(run_cli("compare --source S1 --target S2 " + base("staged")) == 0);
  REQUIRE(run_cli("filter --source S1 --target S2 " + base("staged")) == 0);
  REQUIRE(run_cli("stability " + base("staged")) == 0);
  REQUIRE(run_cli("report " + base("staged")) == 0);

  for (const auto& entry : fs::directory_iterator(dir.str("full"))) {
    std::string name = entry.path().filename().string();
    CAPTURE(name);
    CHECK(testutil::read_file(entry.path().string()) ==
          testutil::read_file(dir.str("staged") + "/" + name));
  }
}

TEST_CASE("cli reports config errors instead of crashing") {
  CHECK(run_cli("run --counts /nonexistent/counts.tsv --output_dir /tmp/x --torso_head 0.9 --torso_tail 0.5") != 0);
  CHECK(run_cli("definitely-not-a-subcommand") != 0);
}

TEST_CASE("cli config file values are overridden by flags") {
  testutil::TempDir dir("cli_config");
  auto corpus = testutil::make_splitjoin_corpus(1900, 2000);
  testutil::write_file(dir.str("counts.tsv"), corpus.counts_tsv);
  testutil::write_file(dir.str("pos.tsv"), corpus.pos_lexicon_tsv);

  PipelineConfig config;
  config.slices = SliceConfig{{{"S1", 1800, 1950}, {"S2", 1951, 2100}}};
  config.counts_path = dir.str("counts.tsv");
  config.pos_lexicon_path = dir.str("pos.tsv");
  config.output_dir = dir.str("from_config");
  config.master_seed = 3;
  config.save(dir.str("config.json"));

  // Override the output dir from the command line; everything else loads
  // from the file.
  REQUIRE(run_cli("ingest --config " + dir.str("config.json") + " --output_dir " +
                  dir.str("overridden")) == 0);
  CHECK(fs::exists(dir.str("overridden") + "/counts_S1.tsv"));
  CHECK(!fs::exists(dir.str("from_config")));
}
