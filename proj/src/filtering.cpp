#include "sensedrift/filtering.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sensedrift {

namespace {

const std::set<std::string>& penn_tags() {
  static const std::set<std::string> tags = {
      "CC", "CD", "DT", "EX", "FW", "IN", "JJ", "JJR", "JJS", "LS", "MD",
      "NN", "NNS", "NNP", "NNPS", "PDT", "POS", "PRP", "PRP$", "RB", "RBR",
      "RBS", "RP", "SYM", "TO", "UH", "VB", "VBD", "VBG", "VBN", "VBP",
      "VBZ", "WDT", "WP", "WP$", "WRB"};
  return tags;
}

}  // namespace

PosLexicon parse_pos_lexicon(std::istream& in) {
  PosLexicon lexicon;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw std::runtime_error("pos lexicon line " + std::to_string(lineno) +
                               ": expected `word \\t tag`");
    }
    std::string word = line.substr(0, tab);
    std::string tag = line.substr(tab + 1);
    if (!penn_tags().count(tag)) {
      throw std::runtime_error("pos lexicon line " + std::to_string(lineno) +
                               ": unknown Penn tag " + tag);
    }
    lexicon.tags[word] = tag;
  }
  return lexicon;
}

PosLexicon load_pos_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pos lexicon: " + path);
  return parse_pos_lexicon(in);
}

std::string base_word(const std::string& word) {
  std::size_t bar = word.rfind('|');
  return bar == std::string::npos ? word : word.substr(0, bar);
}

std::optional<std::string> pos_of(const std::string& word, const PosLexicon& lexicon) {
  std::size_t bar = word.rfind('|');
  if (bar != std::string::npos && bar + 1 < word.size()) {
    return word.substr(bar + 1);
  }
  auto it = lexicon.tags.find(word);
  if (it != lexicon.tags.end()) return it->second;
  return std::nullopt;
}

std::vector<std::string> CandidateList::distinct_words() const {
  std::set<std::string> words;
  for (const auto& [key, records] : entries) words.insert(key.first);
  return {words.begin(), words.end()};
}

CandidateList candidates_from_records(const std::string& source_slice,
                                      const std::string& target_slice,
                                      const std::vector<ChangeRecord>& records) {
  CandidateList list;
  list.source_slice = source_slice;
  list.target_slice = target_slice;
  for (const auto& r : records) {
    if (r.source_slice != source_slice || r.target_slice != target_slice) {
      throw std::invalid_argument("candidates_from_records: record slice mismatch");
    }
    list.entries[{r.word, r.type}].push_back(r);
  }
  return list;
}

CandidateList stage1_intersect(const std::vector<CandidateList>& run_lists) {
  if (run_lists.empty()) {
    throw std::invalid_argument("stage1_intersect: no run lists");
  }
  for (const auto& list : run_lists) {
    if (list.source_slice != run_lists.front().source_slice ||
        list.target_slice != run_lists.front().target_slice) {
      throw std::invalid_argument("stage1_intersect: slice mismatch across runs");
    }
  }
  CandidateList out;
  out.source_slice = run_lists.front().source_slice;
  out.target_slice = run_lists.front().target_slice;
  for (const auto& [key, records] : run_lists.front().entries) {
    bool everywhere = true;
    for (std::size_t i = 1; i < run_lists.size(); ++i) {
      if (!run_lists[i].entries.count(key)) {
        everywhere = false;
        break;
      }
    }
    if (!everywhere) continue;
    auto& merged = out.entries[key];
    for (const auto& list : run_lists) {
      const auto& from = list.entries.at(key);
      merged.insert(merged.end(), from.begin(), from.end());
    }
  }
  return out;
}

CandidateList stage2_pos_filter(const CandidateList& list, const PosLexicon& lexicon) {
  CandidateList out;
  out.source_slice = list.source_slice;
  out.target_slice = list.target_slice;
  for (const auto& [key, records] : list.entries) {
    auto tag = pos_of(key.first, lexicon);
    if (tag && (*tag == "NN" || *tag == "NNS")) out.entries[key] = records;
  }
  return out;
}

CandidateList stage3_torso(const CandidateList& list,
                           const std::unordered_map<std::string, std::uint64_t>& source_freq,
                           double head, double tail) {
  if (head + tail >= 1.0) {
    throw std::invalid_argument("stage3_torso: head + tail must be < 1");
  }
  std::vector<std::string> words = list.distinct_words();
  auto freq = [&](const std::string& word) -> std::uint64_t {
    auto it = source_freq.find(word);
    return it == source_freq.end() ? 0 : it->second;
  };
  std::sort(words.begin(), words.end(),
            [&](const std::string& a, const std::string& b) {
              std::uint64_t fa = freq(a), fb = freq(b);
              if (fa != fb) return fa > fb;
              return a < b;
            });
  std::size_t n = words.size();
  std::size_t drop_head = static_cast<std::size_t>(std::floor(head * n));
  std::size_t drop_tail = static_cast<std::size_t>(std::floor(tail * n));
  std::set<std::string> kept(words.begin() + drop_head, words.end() - drop_tail);

  CandidateList out;
  out.source_slice = list.source_slice;
  out.target_slice = list.target_slice;
  for (const auto& [key, records] : list.entries) {
    if (kept.count(key.first)) out.entries[key] = records;
  }
  return out;
}

}  // namespace sensedrift
