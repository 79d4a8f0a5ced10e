#include "streamsnap/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "streamsnap/format.hpp"

namespace streamsnap {

namespace {

std::string trim_lower(std::string_view v) {
  std::size_t b = 0, e = v.size();
  while (b < e && std::isspace(static_cast<unsigned char>(v[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(v[e - 1]))) --e;
  std::string out(v.substr(b, e - b));
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

// Splits one CSV line into fields; double quotes wrap fields, doubled
// quotes escape a literal quote.
std::vector<std::string> split_csv(const std::string& line,
                                   std::size_t lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      if (!cur.empty())
        throw DataError("quote inside unquoted field", lineno);
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw DataError("unterminated quoted field", lineno);
  fields.push_back(std::move(cur));
  return fields;
}

std::string csv_field(std::string_view v) {
  if (v.find_first_of(",\"\n") == std::string_view::npos)
    return std::string(v);
  std::string out;
  out.reserve(v.size() + 2);
  out += '"';
  for (const char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

constexpr std::string_view kSnapshotHeader =
    "member,n,k,position,timestamp,value";

// Quote parity scan: true iff the scan ends inside an open quoted field
// (doubled escape quotes toggle twice and cancel out).
bool quote_open_at_end(const std::string& line) {
  bool quoted = false;
  for (const char c : line)
    if (c == '"') quoted = !quoted;
  return quoted;
}

std::uint64_t parse_u64_field(const std::string& f, std::size_t lineno) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
  if (res.ec != std::errc() || res.ptr != f.data() + f.size())
    throw DataError("expected an unsigned integer, got '" + f + "'", lineno);
  return v;
}

std::int64_t parse_i64_field(const std::string& f, std::size_t lineno) {
  std::int64_t v = 0;
  const auto res = std::from_chars(f.data(), f.data() + f.size(), v);
  if (res.ec != std::errc() || res.ptr != f.data() + f.size())
    throw DataError("expected an integer, got '" + f + "'", lineno);
  return v;
}

}  // namespace

std::vector<StreamRecord> read_stream(std::istream& in) {
  std::vector<StreamRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1) {
      const std::string h = trim_lower(line);
      if (h == "timestamp,value" || h == "value") continue;
    }
    auto fields = split_csv(line, lineno);
    StreamRecord rec;
    rec.index = out.size() + 1;
    if (fields.size() == 1) {
      rec.value = std::move(fields[0]);
    } else if (fields.size() == 2) {
      rec.timestamp = std::move(fields[0]);
      rec.value = std::move(fields[1]);
    } else {
      throw DataError("expected 1 or 2 fields, got " +
                          std::to_string(fields.size()),
                      lineno);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

RunResult run_stream(const RunConfig& cfg, std::span<const StreamRecord> input) {
  Ensemble<StreamRecord> ens(cfg.schedule, cfg.members, cfg.seed);
  RunResult res;
  if (input.empty()) return res;  // explicit empty report, n = 0

  if (cfg.trace) {
    res.trace.reserve(input.size());
    for (const StreamRecord& rec : input) {
      ens.update(rec);
      res.trace.emplace_back(ens.seen(), ens.quality(cfg.targets));
    }
  } else {
    ens.run(input);
  }
  res.n = ens.seen();

  res.rows.reserve(ens.size() + (cfg.endpoints ? 2 : 0));
  for (std::size_t j = 0; j < ens.size(); ++j) {
    const auto& st = ens.member(j);
    SnapshotRow row;
    row.member = static_cast<std::int64_t>(j);
    row.n = res.n;
    row.k = st.age;
    row.position = st.position();
    row.timestamp = st.payload->timestamp;
    row.value = st.payload->value;
    res.rows.push_back(std::move(row));
  }
  if (cfg.endpoints) {
    const StreamRecord& first = input.front();
    const StreamRecord& last = input.back();
    res.rows.push_back(SnapshotRow{-1, res.n, res.n, 1, first.timestamp,
                                   first.value});
    res.rows.push_back(SnapshotRow{-2, res.n, 1, res.n, last.timestamp,
                                   last.value});
  }
  std::sort(res.rows.begin(), res.rows.end(),
            [](const SnapshotRow& a, const SnapshotRow& b) {
              if (a.position != b.position) return a.position < b.position;
              return a.member < b.member;
            });
  return res;
}

void write_snapshot_csv(std::ostream& out, const RunResult& r) {
  if (!r.trace.empty()) {
    out << "n,Q\n";
    for (const auto& [n, q] : r.trace)
      out << n << ',' << format_double(q) << '\n';
    out << '\n';
  }
  out << kSnapshotHeader << '\n';
  for (const SnapshotRow& row : r.rows) {
    out << row.member << ',' << row.n << ',' << row.k << ',' << row.position
        << ',' << csv_field(row.timestamp) << ',' << csv_field(row.value)
        << '\n';
  }
}

void write_snapshot_json(std::ostream& out, const RunConfig& cfg,
                         const RunResult& r) {
  nlohmann::ordered_json j;
  j["schedule"] = cfg.schedule.spec();
  j["seed"] = cfg.seed;
  j["members"] = cfg.members;
  j["n"] = r.n;
  auto rows = nlohmann::ordered_json::array();
  for (const SnapshotRow& row : r.rows) {
    rows.push_back({{"member", row.member},
                    {"n", row.n},
                    {"k", row.k},
                    {"position", row.position},
                    {"timestamp", row.timestamp},
                    {"value", row.value}});
  }
  j["snapshots"] = std::move(rows);
  if (!r.trace.empty()) {
    auto tr = nlohmann::ordered_json::array();
    for (const auto& [n, q] : r.trace) tr.push_back({{"n", n}, {"Q", q}});
    j["trace"] = std::move(tr);
  }
  out << j.dump(2) << '\n';
}

std::vector<SnapshotRow> parse_snapshot_csv(std::istream& in) {
  std::vector<SnapshotRow> rows;
  std::string line;
  std::size_t lineno = 0;
  bool in_table = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!in_table) {
      if (line == kSnapshotHeader) in_table = true;
      continue;
    }
    if (line.empty()) break;
    // Quoted fields may carry literal newlines; a row keeps absorbing
    // physical lines until its quotes balance.
    std::string cont;
    while (quote_open_at_end(line) && std::getline(in, cont)) {
      ++lineno;
      if (!cont.empty() && cont.back() == '\r') cont.pop_back();
      line += '\n';
      line += cont;
    }
    auto fields = split_csv(line, lineno);
    if (fields.size() != 6)
      throw DataError("snapshot row needs 6 fields, got " +
                          std::to_string(fields.size()),
                      lineno);
    SnapshotRow row;
    row.member = parse_i64_field(fields[0], lineno);
    row.n = parse_u64_field(fields[1], lineno);
    row.k = parse_u64_field(fields[2], lineno);
    row.position = parse_u64_field(fields[3], lineno);
    row.timestamp = std::move(fields[4]);
    row.value = std::move(fields[5]);
    rows.push_back(std::move(row));
  }
  if (!in_table)
    throw DataError("no snapshot table header found", lineno);
  return rows;
}

}  // namespace streamsnap
