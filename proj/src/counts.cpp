#include "sensedrift/counts.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sensedrift {

void SliceCounts::add(const std::string& word, const std::string& feature,
                      std::uint64_t count) {
  pair[word][feature] += count;
  word_count[word] += count;
  feature_count[feature] += count;
  total += count;
}

std::uint64_t SliceCounts::word_freq(const std::string& word) const {
  auto it = word_count.find(word);
  return it == word_count.end() ? 0 : it->second;
}

const SliceCounts& TimeSlicedCounts::slice(const std::string& slice_id) const {
  auto it = by_slice.find(slice_id);
  if (it == by_slice.end()) {
    throw std::runtime_error("unknown slice: " + slice_id);
  }
  return it->second;
}

namespace {

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

// Splits into exactly n tab-separated fields; false if the count differs.
bool split_tsv(std::string_view line, std::size_t n, std::vector<std::string_view>& out) {
  out.clear();
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return out.size() == n;
}

}  // namespace

TimeSlicedCounts parse_counts(std::istream& in, const SliceConfig& config,
                              bool strict, IngestStats* stats) {
  TimeSlicedCounts result;
  result.config = config;
  for (const auto& s : config.slices) result.by_slice[s.id];  // materialize all slices

  IngestStats local;
  IngestStats& st = stats ? *stats : local;
  st = IngestStats{};

  std::string line;
  std::vector<std::string_view> fields;
  while (std::getline(in, line)) {
    ++st.lines_total;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') {
      ++st.comment_lines;
      continue;
    }
    int year = 0;
    std::uint64_t count = 0;
    bool ok = split_tsv(line, 4, fields) && !fields[0].empty() &&
              !fields[1].empty() && parse_int(fields[2], year) &&
              parse_u64(fields[3], count) && count >= 1;
    if (!ok) {
      if (strict) throw ParseError("malformed count line", st.lines_total);
      ++st.malformed;
      continue;
    }
    auto slice_idx = config.slice_for_year(year);
    if (!slice_idx) {
      ++st.dropped_out_of_range;
      continue;
    }
    result.by_slice[config.slices[*slice_idx].id].add(
        std::string(fields[0]), std::string(fields[1]), count);
    ++st.accepted;
  }
  return result;
}

TimeSlicedCounts load_counts(const std::string& path, const SliceConfig& config,
                             bool strict, IngestStats* stats) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open counts file: " + path);
  return parse_counts(in, config, strict, stats);
}

void save_slice_counts(const SliceCounts& counts, std::ostream& out) {
  std::map<std::string, std::map<std::string, std::uint64_t>> sorted;
  for (const auto& [word, feats] : counts.pair) {
    sorted[word].insert(feats.begin(), feats.end());
  }
  out << "# word\tfeature\tcount\n";
  for (const auto& [word, feats] : sorted) {
    for (const auto& [feature, count] : feats) {
      out << word << '\t' << feature << '\t' << count << '\n';
    }
  }
}

SliceCounts load_slice_counts(std::istream& in) {
  SliceCounts counts;
  std::string line;
  std::uint64_t lineno = 0;
  std::vector<std::string_view> fields;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::uint64_t count = 0;
    if (!split_tsv(line, 3, fields) || fields[0].empty() || fields[1].empty() ||
        !parse_u64(fields[2], count) || count == 0) {
      throw ParseError("malformed slice-count line", lineno);
    }
    counts.add(std::string(fields[0]), std::string(fields[1]), count);
  }
  return counts;
}

void save_slice_counts_file(const SliceCounts& counts, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  save_slice_counts(counts, out);
}

SliceCounts load_slice_counts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return load_slice_counts(in);
}

}  // namespace sensedrift
