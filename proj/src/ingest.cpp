// Apache License, Version 2.0, refer to LICENSE.txt

#include "mwcr/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <string_view>

#include <fmt/format.h>

#include "mwcr/error.hpp"

namespace mwcr {
namespace {

std::string line_error(long line, const std::string& msg) { return fmt::format("line {}: {}", line, msg); }

// Splits on whitespace; "..." groups a token (quotes removed, "" is empty).
std::vector<std::string> tokenize(std::string_view s, long line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    if (s[i] == '"') {
      const std::size_t close = s.find('"', i + 1);
      if (close == std::string_view::npos) throw DataError(line_error(line, "unterminated quote"));
      out.emplace_back(s.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      const std::size_t start = i;
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      out.emplace_back(s.substr(start, i - start));
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool is_missing(const std::string& tok) { return tok.empty() || tok == "NA"; }

struct Event {
  double time;
  int cause;  // 0, 1 or 2
};

PreparedSample build_sample(std::vector<Event> events) {
  std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.time != b.time) return a.time < b.time;
    return (a.cause != 0) && (b.cause == 0);  // failures before censorings at equal time
  });

  std::vector<Record> records;
  long leading = 0;
  for (const Event& e : events) {
    if (e.cause == 0) {
      if (records.empty()) {
        ++leading;
      } else {
        ++records.back().removed;
      }
      continue;
    }
    records.push_back({e.time, e.cause == 1 ? Cause::One : Cause::Two, 0});
    if (records.size() == 1) records.front().removed = leading;
  }
  if (records.empty()) throw DataError("no failures: every row is censored");

  long perturbed = 0;
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (!(records[i].time > records[i - 1].time)) {
      records[i].time = std::nextafter(records[i - 1].time, INFINITY);
      ++perturbed;
    }
  }
  const auto n = static_cast<long>(events.size());
  return {ProgressiveSample(std::move(records), n), perturbed, leading};
}

}  // namespace

CauseLabel compute_cause(const FollicularRow& row) {
  const bool disease = row.resp == "NR" || !row.relsite.empty();
  if (disease) return CauseLabel::Disease;
  const bool death = row.resp == "CR" && row.relsite.empty() && row.stat == 1;
  return death ? CauseLabel::Death : CauseLabel::Censored;
}

std::vector<FollicularRow> parse_dataset(std::istream& in) {
  std::string text;
  long line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (trim(text).empty()) continue;
    header = tokenize(text, line_no);
    break;
  }
  if (header.empty()) throw DataError("missing header");

  auto column = [&](const char* name) -> std::size_t {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw DataError(line_error(line_no, fmt::format("missing required column '{}'", name)));
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t c_resp = column("resp");
  const std::size_t c_relsite = column("relsite");
  const std::size_t c_stat = column("stat");
  const std::size_t c_dftime = column("dftime");

  std::vector<FollicularRow> rows;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (trim(text).empty()) continue;
    std::vector<std::string> tok = tokenize(text, line_no);
    // R's write.table prefixes each row with its row name.
    if (tok.size() == header.size() + 1) tok.erase(tok.begin());
    if (tok.size() != header.size()) {
      throw DataError(line_error(line_no, fmt::format("expected {} fields, found {}", header.size(), tok.size())));
    }
    FollicularRow row;
    row.line = line_no;
    row.resp = tok[c_resp];
    row.relsite = is_missing(tok[c_relsite]) ? std::string() : tok[c_relsite];
    const auto stat = parse_number<int>(tok[c_stat]);
    if (!stat || (*stat != 0 && *stat != 1)) {
      throw DataError(line_error(line_no, fmt::format("stat must be 0 or 1, got '{}'", tok[c_stat])));
    }
    row.stat = *stat;
    const auto dftime = parse_number<double>(tok[c_dftime]);
    if (!dftime || !(*dftime > 0.0) || !std::isfinite(*dftime)) {
      throw DataError(line_error(line_no, fmt::format("dftime must be a positive number, got '{}'", tok[c_dftime])));
    }
    row.dftime = *dftime;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i != c_resp && i != c_relsite && i != c_stat && i != c_dftime) row.extra.emplace(header[i], tok[i]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

PreparedSample prepare_case1(const std::vector<FollicularRow>& rows) {
  std::vector<Event> events;
  for (const FollicularRow& r : rows) {
    const auto c = static_cast<int>(compute_cause(r));
    if (c != 0) events.push_back({r.dftime, c});
  }
  if (events.empty()) throw DataError("no failures: every row is censored");
  return build_sample(std::move(events));
}

PreparedSample prepare_case2(const std::vector<FollicularRow>& rows) {
  std::vector<Event> events;
  events.reserve(rows.size());
  for (const FollicularRow& r : rows) events.push_back({r.dftime, static_cast<int>(compute_cause(r))});
  return build_sample(std::move(events));
}

std::string serialize_sample(const ProgressiveSample& s) {
  std::string out = fmt::format("# n={}\ntime,cause,removed\n", s.n());
  for (const Record& r : s.records()) {
    out += fmt::format("{},{},{}\n", r.time, static_cast<int>(r.cause), r.removed);
  }
  return out;
}

ProgressiveSample parse_sample(std::istream& in) {
  std::string text;
  long line_no = 0;
  std::optional<long> n;
  bool seen_header = false;
  std::vector<Record> records;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    const std::string_view line = trim(text);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      if (body.starts_with("n=")) {
        n = parse_number<long>(body.substr(2));
        if (!n || *n < 1) throw DataError(line_error(line_no, "cohort size must be a positive integer"));
      }
      continue;
    }
    if (!seen_header) {
      if (line != "time,cause,removed") {
        throw DataError(line_error(line_no, "expected header 'time,cause,removed'"));
      }
      seen_header = true;
      continue;
    }
    std::vector<std::string_view> f;
    std::size_t start = 0;
    for (std::size_t pos; (pos = line.find(',', start)) != std::string_view::npos; start = pos + 1) {
      f.push_back(line.substr(start, pos - start));
    }
    f.push_back(line.substr(start));
    if (f.size() != 3) throw DataError(line_error(line_no, "expected 3 comma-separated fields"));
    const auto t = parse_number<double>(f[0]);
    const auto c = parse_number<int>(f[1]);
    const auto r = parse_number<long>(f[2]);
    if (!t) throw DataError(line_error(line_no, "unparseable time"));
    if (!c || (*c != 1 && *c != 2)) throw DataError(line_error(line_no, "cause must be 1 or 2"));
    if (!r || *r < 0) throw DataError(line_error(line_no, "removed must be a nonnegative integer"));
    records.push_back({*t, *c == 1 ? Cause::One : Cause::Two, *r});
  }
  if (!seen_header) throw DataError("missing header");
  if (records.empty()) throw DataError("empty sample: at least one failure is required");
  if (n) return ProgressiveSample(std::move(records), *n);
  return ProgressiveSample::from_records(std::move(records));
}

}  // namespace mwcr
