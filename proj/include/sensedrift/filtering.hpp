#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sensedrift/tracker.hpp"

namespace sensedrift {

// word -> Penn tag. Unknown tags in the file are a load error.
struct PosLexicon {
  std::unordered_map<std::string, std::string> tags;
};
PosLexicon parse_pos_lexicon(std::istream& in);  // TSV `word \t tag`
PosLexicon load_pos_lexicon(const std::string& path);

// A word key may carry an inline tag after '|' (e.g. "bank|NN"), which wins
// over the lexicon. Empty when no tag is known anywhere.
std::optional<std::string> pos_of(const std::string& word, const PosLexicon& lexicon);

// The word key without any '|' tag suffix.
std::string base_word(const std::string& word);

// Candidates of one (source, target) comparison, keyed by (word, type),
// each with the records that produced it.
struct CandidateList {
  std::string source_slice;
  std::string target_slice;
  std::map<std::pair<std::string, ChangeType>, std::vector<ChangeRecord>> entries;

  std::vector<std::string> distinct_words() const;  // sorted, deduplicated
};

CandidateList candidates_from_records(const std::string& source_slice,
                                      const std::string& target_slice,
                                      const std::vector<ChangeRecord>& records);

// Keeps (word, type) pairs present in every run's list; records from all
// runs are kept, merged in run order. Throws on slice mismatch or when no
// lists are given.
CandidateList stage1_intersect(const std::vector<CandidateList>& run_lists);

// Keeps entries whose word resolves to NN or NNS; untagged words drop.
CandidateList stage2_pos_filter(const CandidateList& list, const PosLexicon& lexicon);

// Sorts the distinct candidate words by descending source-slice frequency
// (ties by word), drops the first floor(head*n) and last floor(tail*n) of
// the n words, and keeps the entries of the surviving words. Words missing
// from source_freq count as frequency 0.
CandidateList stage3_torso(const CandidateList& list,
                           const std::unordered_map<std::string, std::uint64_t>& source_freq,
                           double head, double tail);

}  // namespace sensedrift
