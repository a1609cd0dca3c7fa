#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sensedrift {

struct Slice {
  std::string id;
  int start_year = 0;
  int end_year = 0;  // inclusive
};

struct SliceConfig {
  std::vector<Slice> slices;  // expected sorted ascending by start_year

  // Index of the slice whose [start_year, end_year] contains `year`.
  std::optional<std::size_t> slice_for_year(int year) const;
  std::optional<std::size_t> index_of(const std::string& slice_id) const;
  std::vector<std::string> ids() const;
};

// The default eight periods T1..T8 (1520-1908 ... 2006-2008).
SliceConfig default_slices();

// Empty iff all invariants hold: start<=end per slice, unique ids,
// ascending order, no overlaps. Each violation names the offending
// slice or pair.
std::vector<std::string> validate_slices(const SliceConfig& config);

// Text config, one `slice_id start_year end_year` triple per line,
// '#' comments. Throws std::runtime_error on malformed lines or if the
// resulting config fails validation.
SliceConfig parse_slice_config(std::istream& in);
SliceConfig load_slice_config(const std::string& path);

}  // namespace sensedrift
