#include "sensedrift/stability.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace sensedrift {

StabilityVerdict assess(const DetectionSeries& series, int stable_min) {
  if (series.detected_targets.empty()) {
    throw std::invalid_argument("assess: empty detection series");
  }
  StabilityVerdict verdict;
  verdict.location = series.detected_targets.front();
  verdict.age = static_cast<int>(series.detected_targets.size());
  verdict.stable = verdict.age >= stable_min;
  return verdict;
}

std::vector<TimelineRow> timeline(
    const std::vector<std::pair<std::string, StabilityVerdict>>& verdicts,
    const std::vector<std::string>& slice_order) {
  std::unordered_map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < slice_order.size(); ++i) order[slice_order[i]] = i;

  std::vector<TimelineRow> rows;
  rows.reserve(verdicts.size());
  for (const auto& [word, verdict] : verdicts) {
    if (!order.count(verdict.location)) {
      throw std::invalid_argument("timeline: unknown slice " + verdict.location);
    }
    rows.push_back({word, verdict.location, verdict.age});
  }
  std::sort(rows.begin(), rows.end(), [&](const TimelineRow& a, const TimelineRow& b) {
    std::size_t ia = order.at(a.location), ib = order.at(b.location);
    if (ia != ib) return ia < ib;
    return a.word < b.word;
  });
  return rows;
}

void write_timeline(const std::vector<TimelineRow>& rows, std::ostream& out) {
  out << "# word\tlocation_slice\tage\n";
  for (const auto& row : rows) {
    out << row.word << '\t' << row.location << '\t' << row.age << '\n';
  }
}

}  // namespace sensedrift
