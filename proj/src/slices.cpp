#include "sensedrift/slices.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sensedrift {

std::optional<std::size_t> SliceConfig::slice_for_year(int year) const {
  for (std::size_t i = 0; i < slices.size(); ++i) {
    if (year >= slices[i].start_year && year <= slices[i].end_year) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> SliceConfig::index_of(const std::string& slice_id) const {
  for (std::size_t i = 0; i < slices.size(); ++i) {
    if (slices[i].id == slice_id) return i;
  }
  return std::nullopt;
}

std::vector<std::string> SliceConfig::ids() const {
  std::vector<std::string> out;
  out.reserve(slices.size());
  for (const auto& s : slices) out.push_back(s.id);
  return out;
}

SliceConfig default_slices() {
  return SliceConfig{{
      {"T1", 1520, 1908},
      {"T2", 1909, 1953},
      {"T3", 1954, 1972},
      {"T4", 1973, 1986},
      {"T5", 1987, 1995},
      {"T6", 1996, 2001},
      {"T7", 2002, 2005},
      {"T8", 2006, 2008},
  }};
}

std::vector<std::string> validate_slices(const SliceConfig& config) {
  std::vector<std::string> violations;
  std::set<std::string> seen;
  for (const auto& s : config.slices) {
    if (s.start_year > s.end_year) {
      violations.push_back("slice " + s.id + ": start_year " +
                           std::to_string(s.start_year) + " > end_year " +
                           std::to_string(s.end_year));
    }
    if (!seen.insert(s.id).second) {
      violations.push_back("duplicate slice_id " + s.id);
    }
  }
  for (std::size_t i = 1; i < config.slices.size(); ++i) {
    const Slice& a = config.slices[i - 1];
    const Slice& b = config.slices[i];
    if (b.start_year < a.start_year) {
      violations.push_back("slices " + a.id + "," + b.id +
                           ": not sorted ascending by start_year");
    }
    // Adjacent check is enough once order holds; compare all pairs so an
    // unsorted config still names every overlap.
  }
  for (std::size_t i = 0; i < config.slices.size(); ++i) {
    for (std::size_t j = i + 1; j < config.slices.size(); ++j) {
      const Slice& a = config.slices[i];
      const Slice& b = config.slices[j];
      if (a.start_year <= b.end_year && b.start_year <= a.end_year) {
        violations.push_back("slices " + a.id + "," + b.id + ": overlap");
      }
    }
  }
  return violations;
}

SliceConfig parse_slice_config(std::istream& in) {
  SliceConfig config;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    Slice s;
    if (!(fields >> s.id >> s.start_year >> s.end_year)) {
      throw std::runtime_error("slice config line " + std::to_string(lineno) +
                               ": expected `slice_id start_year end_year`");
    }
    config.slices.push_back(std::move(s));
  }
  auto violations = validate_slices(config);
  if (!violations.empty()) {
    throw std::runtime_error("invalid slice config: " + violations.front());
  }
  return config;
}

SliceConfig load_slice_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open slice config: " + path);
  return parse_slice_config(in);
}

}  // namespace sensedrift
