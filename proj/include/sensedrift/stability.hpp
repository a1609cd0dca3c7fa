#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sensedrift/tracker.hpp"

namespace sensedrift {

// All later comparisons from one source slice in which a (word, type)
// candidate survived filtering, in slice-chronological order.
struct DetectionSeries {
  std::string word;
  ChangeType type = ChangeType::birth;
  std::string source_slice;
  std::vector<std::string> detected_targets;
};

struct StabilityVerdict {
  bool stable = false;
  std::string location;  // earliest detecting target slice
  int age = 0;           // number of detecting comparisons
};

// Throws std::invalid_argument on an empty series.
StabilityVerdict assess(const DetectionSeries& series, int stable_min);

struct TimelineRow {
  std::string word;
  std::string location;
  int age = 0;
};

// One row per word, sorted by (location in slice order, word). Locations
// must name slices of slice_order.
std::vector<TimelineRow> timeline(
    const std::vector<std::pair<std::string, StabilityVerdict>>& verdicts,
    const std::vector<std::string>& slice_order);

// TSV `word \t location_slice \t age`.
void write_timeline(const std::vector<TimelineRow>& rows, std::ostream& out);

}  // namespace sensedrift
