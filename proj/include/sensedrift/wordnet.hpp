#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace sensedrift {

struct Synset {
  std::string id;  // 8-digit database offset, kept as text
  std::vector<std::string> lemmas;
  std::vector<std::string> hypernyms;  // synset ids
  std::vector<std::string> hyponyms;
};

struct WordNetGraph {
  std::unordered_map<std::string, Synset> synsets;
  // case-folded lemma -> synset ids in sense-rank order (from the index file)
  std::unordered_map<std::string, std::vector<std::string>> lemma_index;

  bool has_lemma(const std::string& lemma) const;
  std::size_t size() const { return synsets.size(); }
};

// Parses the Princeton noun database layout (data.noun + index.noun).
// Keeps lemmas, synset ids and hypernym/hyponym pointers; validates that
// every kept pointer and every index offset resolves. Malformed content
// raises std::runtime_error naming the file and line.
WordNetGraph load_wordnet(const std::string& data_path, const std::string& index_path);
WordNetGraph parse_wordnet(std::istream& data, std::istream& index);

struct Alignment {
  std::string target;
  std::string synset_id;
  double score = 0.0;
};

// Candidate synsets are those containing the target lemma; each scores the
// sum over cluster words of 1/(1+hops) for the nearest synset containing
// that word within `depth` hypernym/hyponym hops (the candidate itself is
// hop 0). Ties go to the target's earlier sense rank. Throws
// std::out_of_range if the target lemma is unknown.
Alignment align_cluster(const std::vector<std::string>& cluster,
                        const std::string& target, const WordNetGraph& wn,
                        int depth);

// Success rules for the three adjudicated change types.
bool judge_birth(const std::set<std::string>& s_init, const std::string& s_new);
bool judge_join(const std::string& s1, const std::string& s2, const std::string& s_new);
bool judge_split(const std::string& s_old, const std::string& s1, const std::string& s2);
// Multi-cluster forms: ids must not all be equal, and one of them must
// match (s_new among the sources; s_old among the targets).
bool judge_join(const std::vector<std::string>& source_ids, const std::string& s_new);
bool judge_split(const std::string& s_old, const std::vector<std::string>& target_ids);

// Case-folded exact intersection.
std::set<std::string> slang_overlap(const std::set<std::string>& birth_candidates,
                                    const std::set<std::string>& slang_list);

// One word per line, '#' comments; words are case-folded.
std::set<std::string> load_word_list(const std::string& path);

std::string ascii_lower(std::string s);

}  // namespace sensedrift
