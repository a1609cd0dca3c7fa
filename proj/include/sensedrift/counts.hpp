#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "sensedrift/slices.hpp"

namespace sensedrift {

// Frequency tables of one time slice. Marginals are always derived from
// the pair counts, so `sum_w c(w) == sum_f c(f) == total` by construction.
struct SliceCounts {
  std::unordered_map<std::string, std::unordered_map<std::string, std::uint64_t>>
      pair;  // word -> feature -> c(w,f)
  std::unordered_map<std::string, std::uint64_t> word_count;     // c(w)
  std::unordered_map<std::string, std::uint64_t> feature_count;  // c(f)
  std::uint64_t total = 0;

  void add(const std::string& word, const std::string& feature, std::uint64_t count);
  std::uint64_t word_freq(const std::string& word) const;
};

struct TimeSlicedCounts {
  SliceConfig config;
  std::unordered_map<std::string, SliceCounts> by_slice;  // keyed by slice id

  const SliceCounts& slice(const std::string& slice_id) const;  // throws if unknown
};

struct IngestStats {
  std::uint64_t lines_total = 0;    // every physical line
  std::uint64_t comment_lines = 0;  // '#'-prefixed and blank lines
  std::uint64_t accepted = 0;
  std::uint64_t dropped_out_of_range = 0;  // year outside all slices
  std::uint64_t malformed = 0;
};

// Raised by strict-mode ingestion and by the count-file loaders.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::uint64_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_number(line) {}
  std::uint64_t line_number;
};

// Reads TSV lines `word \t feature \t year \t count`. Counts for the same
// (slice, word, feature) accumulate additively. In strict mode a malformed
// line throws ParseError with its line number; otherwise it is counted in
// the stats and skipped. Zero-count lines are malformed.
TimeSlicedCounts parse_counts(std::istream& in, const SliceConfig& config,
                              bool strict, IngestStats* stats = nullptr);
TimeSlicedCounts load_counts(const std::string& path, const SliceConfig& config,
                             bool strict, IngestStats* stats = nullptr);

// Per-slice artifact: TSV `word \t feature \t count`, sorted, '#' comments.
void save_slice_counts(const SliceCounts& counts, std::ostream& out);
SliceCounts load_slice_counts(std::istream& in);
void save_slice_counts_file(const SliceCounts& counts, const std::string& path);
SliceCounts load_slice_counts_file(const std::string& path);

}  // namespace sensedrift
