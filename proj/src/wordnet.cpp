#include "sensedrift/wordnet.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sensedrift {

std::string ascii_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool WordNetGraph::has_lemma(const std::string& lemma) const {
  return lemma_index.count(ascii_lower(lemma)) > 0;
}

namespace {

[[noreturn]] void parse_fail(const std::string& file, std::size_t line,
                             const std::string& why) {
  throw std::runtime_error("wordnet " + file + " line " + std::to_string(line) +
                           ": " + why);
}

bool is_offset(const std::string& token) {
  return !token.empty() &&
         std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

// data.noun:
//   offset lex_filenum ss_type w_cnt word lex_id [word lex_id]...
//   p_cnt [ptr_symbol offset pos source_target]... | gloss
// w_cnt is hex, p_cnt decimal. License header lines start with a space.
void parse_data(std::istream& data, WordNetGraph& wn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(data, line)) {
    ++lineno;
    if (line.empty() || line[0] == ' ') continue;
    std::istringstream fields(line);
    Synset synset;
    std::string lex_filenum, ss_type, w_cnt_hex;
    if (!(fields >> synset.id >> lex_filenum >> ss_type >> w_cnt_hex)) {
      parse_fail("data", lineno, "truncated synset header");
    }
    if (!is_offset(synset.id)) parse_fail("data", lineno, "bad synset offset " + synset.id);
    std::size_t w_cnt = 0;
    try {
      w_cnt = std::stoul(w_cnt_hex, nullptr, 16);
    } catch (const std::exception&) {
      parse_fail("data", lineno, "bad word count " + w_cnt_hex);
    }
    if (w_cnt == 0) parse_fail("data", lineno, "synset without lemmas");
    for (std::size_t i = 0; i < w_cnt; ++i) {
      std::string word, lex_id;
      if (!(fields >> word >> lex_id)) parse_fail("data", lineno, "truncated word list");
      synset.lemmas.push_back(std::move(word));
    }
    std::size_t p_cnt = 0;
    if (!(fields >> p_cnt)) parse_fail("data", lineno, "missing pointer count");
    for (std::size_t i = 0; i < p_cnt; ++i) {
      std::string symbol, offset, pos, source_target;
      if (!(fields >> symbol >> offset >> pos >> source_target)) {
        parse_fail("data", lineno, "truncated pointer list");
      }
      if (!is_offset(offset)) parse_fail("data", lineno, "bad pointer offset " + offset);
      if (symbol == "@" || symbol == "@i") {
        synset.hypernyms.push_back(offset);
      } else if (symbol == "~" || symbol == "~i") {
        synset.hyponyms.push_back(offset);
      }
      // Other relation types are outside the graph we keep.
    }
    if (wn.synsets.count(synset.id)) {
      parse_fail("data", lineno, "duplicate synset id " + synset.id);
    }
    wn.synsets.emplace(synset.id, std::move(synset));
  }
}

// index.noun:
//   lemma pos synset_cnt p_cnt [ptr_symbol]... sense_cnt tagsense_cnt
//   offset [offset]...    (offsets in sense-rank order)
void parse_index(std::istream& index, WordNetGraph& wn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(index, line)) {
    ++lineno;
    if (line.empty() || line[0] == ' ') continue;
    std::istringstream fields(line);
    std::string lemma, pos;
    std::size_t synset_cnt = 0, p_cnt = 0;
    if (!(fields >> lemma >> pos >> synset_cnt >> p_cnt)) {
      parse_fail("index", lineno, "truncated entry header");
    }
    for (std::size_t i = 0; i < p_cnt; ++i) {
      std::string symbol;
      if (!(fields >> symbol)) parse_fail("index", lineno, "truncated pointer symbols");
    }
    std::size_t sense_cnt = 0, tagsense_cnt = 0;
    if (!(fields >> sense_cnt >> tagsense_cnt)) {
      parse_fail("index", lineno, "missing sense counts");
    }
    std::vector<std::string> offsets;
    for (std::size_t i = 0; i < synset_cnt; ++i) {
      std::string offset;
      if (!(fields >> offset)) parse_fail("index", lineno, "truncated offset list");
      if (!wn.synsets.count(offset)) {
        parse_fail("index", lineno, "offset " + offset + " not in data file");
      }
      offsets.push_back(std::move(offset));
    }
    wn.lemma_index[ascii_lower(lemma)] = std::move(offsets);
  }
}

}  // namespace

WordNetGraph parse_wordnet(std::istream& data, std::istream& index) {
  WordNetGraph wn;
  parse_data(data, wn);
  for (const auto& [id, synset] : wn.synsets) {
    for (const auto& edges : {&synset.hypernyms, &synset.hyponyms}) {
      for (const auto& other : *edges) {
        if (!wn.synsets.count(other)) {
          throw std::runtime_error("wordnet data: synset " + id +
                                   " points at missing synset " + other);
        }
      }
    }
  }
  parse_index(index, wn);
  return wn;
}

WordNetGraph load_wordnet(const std::string& data_path, const std::string& index_path) {
  std::ifstream data(data_path), index(index_path);
  if (!data) throw std::runtime_error("cannot open wordnet data: " + data_path);
  if (!index) throw std::runtime_error("cannot open wordnet index: " + index_path);
  return parse_wordnet(data, index);
}

namespace {

// Relation-hop distances from `start`, bounded by depth.
std::unordered_map<std::string, int> bfs_hops(const WordNetGraph& wn,
                                              const std::string& start, int depth) {
  std::unordered_map<std::string, int> dist{{start, 0}};
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    std::string id = queue.front();
    queue.pop_front();
    int hops = dist[id];
    if (hops >= depth) continue;
    const Synset& synset = wn.synsets.at(id);
    for (const auto& edges : {&synset.hypernyms, &synset.hyponyms}) {
      for (const auto& next : *edges) {
        if (dist.emplace(next, hops + 1).second) queue.push_back(next);
      }
    }
  }
  return dist;
}

}  // namespace

Alignment align_cluster(const std::vector<std::string>& cluster,
                        const std::string& target, const WordNetGraph& wn,
                        int depth) {
  auto it = wn.lemma_index.find(ascii_lower(target));
  if (it == wn.lemma_index.end() || it->second.empty()) {
    throw std::out_of_range("align_cluster: lemma not in wordnet: " + target);
  }

  // lemma -> containing synsets, from the data file, so cluster words that
  // never made it into the index still score.
  std::unordered_map<std::string, std::vector<const Synset*>> by_lemma;
  for (const auto& [id, synset] : wn.synsets) {
    for (const auto& lemma : synset.lemmas) {
      by_lemma[ascii_lower(lemma)].push_back(&synset);
    }
  }

  Alignment best;
  best.target = target;
  best.score = -1.0;
  for (const std::string& candidate : it->second) {  // sense-rank order
    auto hops = bfs_hops(wn, candidate, depth);
    double score = 0.0;
    for (const auto& word : cluster) {
      auto wl = by_lemma.find(ascii_lower(word));
      if (wl == by_lemma.end()) continue;
      int nearest = -1;
      for (const Synset* synset : wl->second) {
        auto d = hops.find(synset->id);
        if (d == hops.end()) continue;
        if (nearest < 0 || d->second < nearest) nearest = d->second;
      }
      if (nearest >= 0) score += 1.0 / (1.0 + nearest);
    }
    if (score > best.score) {  // strict: earlier sense rank wins ties
      best.score = score;
      best.synset_id = candidate;
    }
  }
  return best;
}

bool judge_birth(const std::set<std::string>& s_init, const std::string& s_new) {
  return s_init.count(s_new) == 0;
}

bool judge_join(const std::string& s1, const std::string& s2, const std::string& s_new) {
  return s1 != s2 && (s_new == s1 || s_new == s2);
}

bool judge_split(const std::string& s_old, const std::string& s1, const std::string& s2) {
  return s1 != s2 && (s1 == s_old || s2 == s_old);
}

bool judge_join(const std::vector<std::string>& source_ids, const std::string& s_new) {
  if (source_ids.size() < 2) return false;
  bool all_equal = std::all_of(source_ids.begin(), source_ids.end(),
                               [&](const std::string& id) { return id == source_ids.front(); });
  if (all_equal) return false;
  return std::find(source_ids.begin(), source_ids.end(), s_new) != source_ids.end();
}

bool judge_split(const std::string& s_old, const std::vector<std::string>& target_ids) {
  if (target_ids.size() < 2) return false;
  bool all_equal = std::all_of(target_ids.begin(), target_ids.end(),
                               [&](const std::string& id) { return id == target_ids.front(); });
  if (all_equal) return false;
  return std::find(target_ids.begin(), target_ids.end(), s_old) != target_ids.end();
}

std::set<std::string> slang_overlap(const std::set<std::string>& birth_candidates,
                                    const std::set<std::string>& slang_list) {
  std::set<std::string> folded_slang;
  for (const auto& word : slang_list) folded_slang.insert(ascii_lower(word));
  std::set<std::string> overlap;
  for (const auto& word : birth_candidates) {
    std::string folded = ascii_lower(word);
    if (folded_slang.count(folded)) overlap.insert(folded);
  }
  return overlap;
}

std::set<std::string> load_word_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open word list: " + path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    words.insert(ascii_lower(line));
  }
  return words;
}

}  // namespace sensedrift
