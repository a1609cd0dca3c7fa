#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sensedrift/senses.hpp"

namespace sensedrift {

// Intersection counts between two clusterings of the same word. Rows 0..m-1
// are source clusters, columns 0..n-1 target clusters; row m counts target
// words absent from every source cluster (novel), column n counts source
// words absent from every target cluster (vanished). Cell (m, n) is unused
// and stays 0.
struct IntersectionMatrix {
  int m = 0;
  int n = 0;
  std::vector<std::vector<int>> raw;  // (m+1) x (n+1)
  std::vector<int> source_sizes;      // m entries
  std::vector<int> target_sizes;      // n entries

  IntersectionMatrix transposed() const;
  double novel_fraction(int target) const;     // raw[m][l] / target_sizes[l]
  double vanished_fraction(int source) const;  // raw[k][n] / source_sizes[k]
};

// Throws std::invalid_argument if either clustering has an empty cluster or
// a word in two clusters.
IntersectionMatrix intersection_matrix(
    const std::vector<std::vector<std::string>>& source,
    const std::vector<std::vector<std::string>>& target);

// Target clusters whose novel fraction is >= birth_threshold (inclusive).
std::vector<int> detect_birth(const IntersectionMatrix& M, double birth_threshold);

// Source clusters whose vanished fraction is >= death_threshold.
std::vector<int> detect_death(const IntersectionMatrix& M, double death_threshold);

// For each source cluster k, the target clusters holding at least
// per_cluster_min of its words; flagged when there are >= 2 of them and
// together they cover strictly more than union_min of the source cluster.
struct SplitFlag {
  int source = 0;
  std::vector<int> targets;
};
std::vector<SplitFlag> detect_split(const IntersectionMatrix& M,
                                    double per_cluster_min, double union_min);

// detect_split on the transposed matrix: >= 2 source clusters each
// contributing at least per_cluster_min of one target cluster.
struct JoinFlag {
  std::vector<int> sources;
  int target = 0;
};
std::vector<JoinFlag> detect_join(const IntersectionMatrix& M,
                                  double per_cluster_min, double union_min);

enum class ChangeType { birth, split, join, death };
std::string change_type_name(ChangeType t);
ChangeType parse_change_type(const std::string& name);

struct ChangeRecord {
  std::string word;
  ChangeType type = ChangeType::birth;
  std::string source_slice;
  std::string target_slice;
  std::vector<int> source_clusters;  // empty for birth; one for split/death
  std::vector<int> target_clusters;  // empty for death; one for join/birth
  // birth/death: the single novel/vanished fraction. split: coverage of the
  // source cluster per flagged target cluster; join: contribution of each
  // flagged source cluster to the target cluster.
  std::vector<double> cluster_fractions;
  double union_coverage = 0.0;  // split/join only
  std::vector<int> runs;        // run indices this record was observed in

  bool operator==(const ChangeRecord&) const = default;
};

struct Thresholds {
  double birth = 0.8;
  double split_min = 0.3;
  double split_union = 0.8;
  double death = 0.8;
};

// All four detectors over one intersection matrix, materialized as records.
// Both clusterings must belong to the same word.
std::vector<ChangeRecord> compare_word(const SenseClustering& source,
                                       const SenseClustering& target,
                                       const Thresholds& thresholds);

// JSONL with fixed field names: word, type, source_slice, target_slice,
// source_clusters, target_clusters, scores, runs.
void write_change_records(const std::vector<ChangeRecord>& records, std::ostream& out);
std::vector<ChangeRecord> read_change_records(std::istream& in);
void write_change_records_file(const std::vector<ChangeRecord>& records,
                               const std::string& path);
std::vector<ChangeRecord> read_change_records_file(const std::string& path);

// Deterministic emission order used by every writer.
bool change_record_less(const ChangeRecord& a, const ChangeRecord& b);

}  // namespace sensedrift
