#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "streamsnap/ensemble.hpp"
#include "streamsnap/schedule.hpp"

namespace streamsnap {

// One input stream record. index is the 1-based stream position, assigned
// on read; timestamp and value are opaque text (value may be empty).
struct StreamRecord {
  std::uint64_t index = 0;
  std::string timestamp;
  std::string value;

  friend bool operator==(const StreamRecord&, const StreamRecord&) = default;
};

// Malformed input data; line is the 1-based line number.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Reads a record stream: one record per line, either `value` or
// `timestamp,value`, RFC-4180-style quoting. A first line equal (after
// trimming and lowercasing) to "timestamp,value" or "value" is a header.
std::vector<StreamRecord> read_stream(std::istream& in);

enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  Schedule schedule = Schedule::uniform();
  std::size_t members = 1;
  std::uint64_t seed = 0;
  TargetSet targets;  // quality targets for --trace
  bool trace = false;
  bool endpoints = false;
  OutputFormat format = OutputFormat::kCsv;
};

// One serialized snapshot. member is the 0-based ensemble member id;
// the endpoint pseudo-members use -1 (first record) and -2 (last record).
struct SnapshotRow {
  std::int64_t member = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t position = 0;
  std::string timestamp;
  std::string value;

  friend bool operator==(const SnapshotRow&, const SnapshotRow&) = default;
};

struct RunResult {
  std::uint64_t n = 0;
  // Sorted by (position, member); empty input yields an explicit empty report.
  std::vector<SnapshotRow> rows;
  // (n, Q) pairs, one per item, when tracing.
  std::vector<std::pair<std::uint64_t, double>> trace;
};

RunResult run_stream(const RunConfig& cfg, std::span<const StreamRecord> input);

// CSV: optional trace block ("n,Q" rows) followed by a blank line, then the
// snapshot table "member,n,k,position,timestamp,value".
void write_snapshot_csv(std::ostream& out, const RunResult& r);
void write_snapshot_json(std::ostream& out, const RunConfig& cfg,
                         const RunResult& r);

// Parses the snapshot table back from CSV produced by write_snapshot_csv
// (skips any leading trace block). Round-trips rows exactly.
std::vector<SnapshotRow> parse_snapshot_csv(std::istream& in);

}  // namespace streamsnap
