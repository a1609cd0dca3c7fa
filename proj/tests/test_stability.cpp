#include <doctest.h>

#include <sstream>

#include "sensedrift/stability.hpp"
#include "testutil.hpp"

using namespace sensedrift;

namespace {

DetectionSeries series_of(const std::string& source,
                          std::vector<std::string> targets) {
  DetectionSeries series;
  series.word = "w";
  series.type = ChangeType::birth;
  series.source_slice = source;
  series.detected_targets = std::move(targets);
  return series;
}

}  // namespace

TEST_CASE("assess: location is the earliest detection, age counts them") {
  StabilityVerdict v = assess(series_of("T2", {"T4", "T5", "T6"}), 2);
  CHECK(v.location == "T4");
  CHECK(v.age == 3);
  CHECK(v.stable);

  v = assess(series_of("T2", {"T6"}), 2);
  CHECK(v.location == "T6");
  CHECK(v.age == 1);
  CHECK(!v.stable);

  v = assess(series_of("T1", {"T3", "T7"}), 2);
  CHECK(v.location == "T3");
  CHECK(v.age == 2);
  CHECK(v.stable);
}

TEST_CASE("assess rejects an empty series") {
  CHECK_THROWS_AS(assess(series_of("T1", {}), 2), std::invalid_argument);
}

TEST_CASE("assess: dropping the earliest detection never moves location earlier") {
  std::vector<std::string> targets = {"T3", "T5", "T6", "T8"};
  auto order = default_slices().ids();
  auto index = [&](const std::string& id) {
    return std::find(order.begin(), order.end(), id) - order.begin();
  };
  while (targets.size() > 1) {
    auto before = assess(series_of("T1", targets), 2);
    targets.erase(targets.begin());
    auto after = assess(series_of("T1", targets), 2);
    CHECK(index(after.location) >= index(before.location));
  }
}

TEST_CASE("age never exceeds the number of later slices") {
  auto ids = default_slices().ids();
  for (std::size_t source = 0; source + 1 < ids.size(); ++source) {
    std::vector<std::string> all_later(ids.begin() + source + 1, ids.end());
    auto verdict = assess(series_of(ids[source], all_later), 2);
    CHECK(verdict.age == static_cast<int>(ids.size() - source - 1));
  }
}

TEST_CASE("timeline sorts by slice chronology then word") {
  auto order = default_slices().ids();
  std::vector<std::pair<std::string, StabilityVerdict>> verdicts = {
      {"zeta", {true, "T3", 2}},
      {"alpha", {true, "T2", 4}},
      {"beta", {true, "T3", 3}},
  };
  auto rows = timeline(verdicts, order);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].word == "alpha");
  CHECK(rows[0].location == "T2");
  CHECK(rows[1].word == "beta");
  CHECK(rows[2].word == "zeta");

  CHECK(timeline({}, order).empty());
}

TEST_CASE("timeline orders by chronology, not by id text") {
  std::vector<std::string> order = {"T2", "T10"};  // T10 after T2 chronologically
  std::vector<std::pair<std::string, StabilityVerdict>> verdicts = {
      {"late", {true, "T10", 1}},
      {"early", {true, "T2", 1}},
  };
  auto rows = timeline(verdicts, order);
  CHECK(rows[0].word == "early");
  CHECK(rows[1].word == "late");
}

TEST_CASE("timeline TSV layout") {
  std::vector<TimelineRow> rows = {{"w", "T3", 2}};
  std::ostringstream out;
  write_timeline(rows, out);
  CHECK(out.str() == "# word\tlocation_slice\tage\nw\tT3\t2\n");
}
