#include <doctest.h>

#include <sstream>

#include "sensedrift/filtering.hpp"
#include "sensedrift/hashing.hpp"
#include "testutil.hpp"

using namespace sensedrift;

namespace {

ChangeRecord record_of(const std::string& word, ChangeType type, int run) {
  ChangeRecord r;
  r.word = word;
  r.type = type;
  r.source_slice = "T1";
  r.target_slice = "T2";
  r.runs = {run};
  if (type == ChangeType::birth || type == ChangeType::death) {
    r.cluster_fractions = {1.0};
  }
  return r;
}

CandidateList list_of(const std::vector<std::pair<std::string, ChangeType>>& keys,
                      int run) {
  std::vector<ChangeRecord> records;
  for (const auto& [word, type] : keys) records.push_back(record_of(word, type, run));
  return candidates_from_records("T1", "T2", records);
}

bool has(const CandidateList& list, const std::string& word, ChangeType type) {
  return list.entries.count({word, type}) > 0;
}

}  // namespace

TEST_CASE("stage1 keeps only (word, type) pairs present in all three runs") {
  auto run0 = list_of({{"w", ChangeType::birth}, {"v", ChangeType::birth}}, 0);
  auto run1 = list_of({{"w", ChangeType::birth}, {"v", ChangeType::birth}}, 1);
  auto run2 = list_of({{"w", ChangeType::birth}, {"w", ChangeType::split}}, 2);

  CandidateList out = stage1_intersect({run0, run1, run2});
  CHECK(has(out, "w", ChangeType::birth));       // in all three
  CHECK(!has(out, "v", ChangeType::birth));      // missing from run 2
  CHECK(!has(out, "w", ChangeType::split));      // only in run 2
  CHECK(out.entries.at({"w", ChangeType::birth}).size() == 3);  // records kept per run
}

TEST_CASE("stage1 is commutative in its run lists") {
  auto a = list_of({{"w", ChangeType::birth}, {"x", ChangeType::death}}, 0);
  auto b = list_of({{"w", ChangeType::birth}, {"y", ChangeType::join}}, 1);
  auto c = list_of({{"w", ChangeType::birth}, {"x", ChangeType::death}}, 2);

  auto keys = [](const CandidateList& list) {
    std::vector<std::pair<std::string, ChangeType>> out;
    for (const auto& [key, records] : list.entries) out.push_back(key);
    return out;
  };
  CHECK(keys(stage1_intersect({a, b, c})) == keys(stage1_intersect({c, a, b})));
  CHECK(keys(stage1_intersect({b, c, a})) == keys(stage1_intersect({a, b, c})));
}

TEST_CASE("stage1 rejects slice mismatches") {
  auto good = list_of({{"w", ChangeType::birth}}, 0);
  CandidateList other = good;
  other.target_slice = "T3";
  CHECK_THROWS_AS(stage1_intersect({good, other}), std::invalid_argument);
}

TEST_CASE("stage2 keeps NN/NNS via lexicon or inline tag, drops the rest") {
  std::istringstream lexicon_tsv
      {"compiler\tNN\nquickly\tRB\nbricks\tNNS\n"};
  PosLexicon lexicon = parse_pos_lexicon(lexicon_tsv);

  auto list = list_of({{"compiler", ChangeType::birth},
                       {"quickly", ChangeType::birth},
                       {"bricks", ChangeType::birth},
                       {"mystery", ChangeType::birth},     // untagged -> drop
                       {"inline|NN", ChangeType::birth},   // tag wins
                       {"verbish|VB", ChangeType::birth}},
                      0);
  CandidateList out = stage2_pos_filter(list, lexicon);
  CHECK(has(out, "compiler", ChangeType::birth));
  CHECK(has(out, "bricks", ChangeType::birth));
  CHECK(has(out, "inline|NN", ChangeType::birth));
  CHECK(!has(out, "quickly", ChangeType::birth));
  CHECK(!has(out, "mystery", ChangeType::birth));
  CHECK(!has(out, "verbish|VB", ChangeType::birth));
}

TEST_CASE("pos lexicon rejects non-Penn tags") {
  std::istringstream bad("word\tNOUN\n");
  CHECK_THROWS_AS(parse_pos_lexicon(bad), std::runtime_error);
}

TEST_CASE("stage3 trims floor(0.2 n) from both frequency ends") {
  std::vector<std::pair<std::string, ChangeType>> keys;
  std::unordered_map<std::string, std::uint64_t> freq;
  for (int i = 0; i < 10; ++i) {
    std::string word = "w" + std::to_string(i);
    keys.push_back({word, ChangeType::birth});
    freq[word] = 1000 - 100 * i;  // w0 most frequent .. w9 least
  }
  CandidateList out = stage3_torso(list_of(keys, 0), freq, 0.2, 0.2);
  // ranks 3..8 survive: w2..w7
  CHECK(out.entries.size() == 6);
  for (int i = 0; i < 10; ++i) {
    bool kept = i >= 2 && i <= 7;
    CHECK(has(out, "w" + std::to_string(i), ChangeType::birth) == kept);
  }
}

TEST_CASE("stage3 with four candidates drops nothing at 20 percent") {
  std::vector<std::pair<std::string, ChangeType>> keys;
  std::unordered_map<std::string, std::uint64_t> freq;
  for (int i = 0; i < 4; ++i) {
    keys.push_back({"w" + std::to_string(i), ChangeType::birth});
    freq["w" + std::to_string(i)] = 10 + i;
  }
  CandidateList out = stage3_torso(list_of(keys, 0), freq, 0.2, 0.2);
  CHECK(out.entries.size() == 4);
}

TEST_CASE("stage3 treats missing frequencies as zero, sorting to the tail") {
  std::vector<std::pair<std::string, ChangeType>> keys = {
      {"known1", ChangeType::birth},
      {"known2", ChangeType::birth},
      {"known3", ChangeType::birth},
      {"known4", ChangeType::birth},
      {"ghost", ChangeType::birth},
  };
  std::unordered_map<std::string, std::uint64_t> freq = {
      {"known1", 400}, {"known2", 300}, {"known3", 200}, {"known4", 100}};
  // n=5 -> floor(1) cut from each end: known1 (head) and ghost (tail).
  CandidateList out = stage3_torso(list_of(keys, 0), freq, 0.2, 0.2);
  CHECK(out.entries.size() == 3);
  CHECK(!has(out, "known1", ChangeType::birth));
  CHECK(!has(out, "ghost", ChangeType::birth));
  CHECK(has(out, "known3", ChangeType::birth));
}

TEST_CASE("every stage output is a subset of its input, fuzzed") {
  SplitMix64 rng(808);
  PosLexicon lexicon;
  for (int i = 0; i < 40; ++i) {
    std::string word = "w" + std::to_string(i);
    lexicon.tags[word] = i % 3 == 0 ? "NN" : (i % 3 == 1 ? "VB" : "NNS");
  }
  auto subset_of = [](const CandidateList& small, const CandidateList& big) {
    for (const auto& [key, records] : small.entries) {
      if (!big.entries.count(key)) return false;
    }
    return true;
  };
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<CandidateList> runs;
    for (int run = 0; run < 3; ++run) {
      std::vector<std::pair<std::string, ChangeType>> keys;
      int entries = static_cast<int>(rng.below(20));
      for (int e = 0; e < entries; ++e) {
        keys.push_back({"w" + std::to_string(rng.below(40)),
                        static_cast<ChangeType>(rng.below(4))});
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      runs.push_back(list_of(keys, run));
    }
    CandidateList s1 = stage1_intersect(runs);
    for (const auto& run_list : runs) CHECK(subset_of(s1, run_list));

    CandidateList s2 = stage2_pos_filter(s1, lexicon);
    CHECK(subset_of(s2, s1));

    std::unordered_map<std::string, std::uint64_t> freq;
    for (int i = 0; i < 40; ++i) freq["w" + std::to_string(i)] = rng.below(5000);
    CandidateList s3 = stage3_torso(s2, freq, 0.2, 0.2);
    CHECK(subset_of(s3, s2));
  }
}

TEST_CASE("stage3 retains exactly n - 2 floor(0.2 n) words for n up to 1000") {
  SplitMix64 rng(606);
  for (std::size_t n = 0; n <= 1000; ++n) {
    std::vector<std::pair<std::string, ChangeType>> keys;
    std::unordered_map<std::string, std::uint64_t> freq;
    for (std::size_t i = 0; i < n; ++i) {
      std::string word = "w" + std::to_string(i);
      keys.push_back({word, ChangeType::birth});
      freq[word] = rng.below(10000);
    }
    CandidateList out = stage3_torso(list_of(keys, 0), freq, 0.2, 0.2);
    std::size_t expected = n - 2 * (n / 5);
    CHECK(out.entries.size() == expected);
  }
}
