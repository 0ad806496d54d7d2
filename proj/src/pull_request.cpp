#include "tima/pull_request.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "tima/errors.hpp"

namespace tima {

namespace {

using nlohmann::json;

// Days since 1970-01-01 for a proleptic Gregorian date.
std::int64_t days_from_civil(std::int64_t y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const int yoe = static_cast<int>(y - era * 400);
  const int doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const int doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + doe - 719468;
}

int parse_digits(std::string_view s, std::size_t pos, std::size_t count,
                 std::string_view ts) {
  if (pos + count > s.size())
    throw DataError("bad RFC 3339 timestamp: " + std::string(ts));
  int value = 0;
  for (std::size_t i = pos; i < pos + count; ++i) {
    char c = s[i];
    if (c < '0' || c > '9')
      throw DataError("bad RFC 3339 timestamp: " + std::string(ts));
    value = value * 10 + (c - '0');
  }
  return value;
}

PullRequest pr_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw DataError(where + ": record is not an object");
  auto require = [&](const char* key) -> const json& {
    auto it = j.find(key);
    if (it == j.end()) throw DataError(where + ": missing field '" + key + "'");
    return *it;
  };
  PullRequest pr;
  const json& id = require("id");
  if (id.is_string())
    pr.id = id.get<std::string>();
  else if (id.is_number_integer())
    pr.id = std::to_string(id.get<std::int64_t>());
  else
    throw DataError(where + ": 'id' must be a string or integer");
  if (pr.id.empty()) throw DataError(where + ": 'id' must not be empty");

  const json& title = require("title");
  if (!title.is_string()) throw DataError(where + ": 'title' must be a string");
  pr.title = title.get<std::string>();

  if (auto it = j.find("description"); it != j.end() && !it->is_null()) {
    if (!it->is_string())
      throw DataError(where + ": 'description' must be a string");
    pr.description = it->get<std::string>();
  }
  if (auto it = j.find("comments"); it != j.end() && !it->is_null()) {
    if (!it->is_array())
      throw DataError(where + ": 'comments' must be an array");
    for (const auto& c : *it) {
      if (!c.is_string())
        throw DataError(where + ": 'comments' entries must be strings");
      pr.comments.push_back(c.get<std::string>());
    }
  }
  const json& submitter = require("submitter");
  if (!submitter.is_string())
    throw DataError(where + ": 'submitter' must be a string");
  pr.submitter = submitter.get<std::string>();

  if (auto it = j.find("reviewers"); it != j.end() && !it->is_null()) {
    if (!it->is_array())
      throw DataError(where + ": 'reviewers' must be an array");
    for (const auto& r : *it) {
      if (!r.is_string())
        throw DataError(where + ": 'reviewers' entries must be strings");
      pr.reviewers.insert(r.get<std::string>());
    }
  }
  const json& closed = require("closed_at");
  if (!closed.is_string())
    throw DataError(where + ": 'closed_at' must be an RFC 3339 string");
  try {
    pr.closed_at = parse_rfc3339(closed.get<std::string>());
  } catch (const DataError& e) {
    throw DataError(where + ": " + e.what());
  }
  return pr;
}

json pr_to_json(const PullRequest& pr) {
  json j;
  j["id"] = pr.id;
  j["title"] = pr.title;
  j["description"] = pr.description;
  j["comments"] = pr.comments;
  j["submitter"] = pr.submitter;
  j["reviewers"] = std::vector<std::string>(pr.reviewers.begin(), pr.reviewers.end());
  j["closed_at"] = format_rfc3339(pr.closed_at);
  return j;
}

}  // namespace

std::string concatenated_text(const PullRequest& pr) {
  std::string text = pr.title;
  if (!pr.description.empty()) {
    text += '\n';
    text += pr.description;
  }
  for (const auto& c : pr.comments) {
    text += '\n';
    text += c;
  }
  return text;
}

std::int64_t parse_rfc3339(std::string_view ts) {
  // YYYY-MM-DDTHH:MM:SS[.frac](Z|+HH:MM|-HH:MM)
  auto expect = [&](std::size_t pos, char c) {
    if (pos >= ts.size() || ts[pos] != c)
      throw DataError("bad RFC 3339 timestamp: " + std::string(ts));
  };
  int year = parse_digits(ts, 0, 4, ts);
  expect(4, '-');
  int month = parse_digits(ts, 5, 2, ts);
  expect(7, '-');
  int day = parse_digits(ts, 8, 2, ts);
  if (ts.size() <= 10 || (ts[10] != 'T' && ts[10] != 't' && ts[10] != ' '))
    throw DataError("bad RFC 3339 timestamp: " + std::string(ts));
  int hour = parse_digits(ts, 11, 2, ts);
  expect(13, ':');
  int minute = parse_digits(ts, 14, 2, ts);
  expect(16, ':');
  int second = parse_digits(ts, 17, 2, ts);
  std::size_t pos = 19;
  if (pos < ts.size() && ts[pos] == '.') {
    ++pos;
    std::size_t start = pos;
    while (pos < ts.size() && ts[pos] >= '0' && ts[pos] <= '9') ++pos;
    if (pos == start)
      throw DataError("bad RFC 3339 timestamp: " + std::string(ts));
  }
  if (pos >= ts.size())
    throw DataError("bad RFC 3339 timestamp (missing offset): " + std::string(ts));
  std::int64_t offset = 0;
  if (ts[pos] == 'Z' || ts[pos] == 'z') {
    ++pos;
  } else if (ts[pos] == '+' || ts[pos] == '-') {
    int sign = ts[pos] == '+' ? 1 : -1;
    int oh = parse_digits(ts, pos + 1, 2, ts);
    expect(pos + 3, ':');
    int om = parse_digits(ts, pos + 4, 2, ts);
    offset = sign * (oh * 3600 + om * 60);
    pos += 6;
  } else {
    throw DataError("bad RFC 3339 timestamp: " + std::string(ts));
  }
  if (pos != ts.size())
    throw DataError("bad RFC 3339 timestamp (trailing data): " + std::string(ts));
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 ||
      minute > 59 || second > 60)
    throw DataError("bad RFC 3339 timestamp (out of range): " + std::string(ts));
  std::int64_t days = days_from_civil(year, month, day);
  return days * 86400 + hour * 3600 + minute * 60 + second - offset;
}

std::string format_rfc3339(std::int64_t t) {
  std::int64_t days = t / 86400;
  std::int64_t rem = t % 86400;
  if (rem < 0) {
    rem += 86400;
    --days;
  }
  // Inverse of days_from_civil.
  std::int64_t z = days + 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const int doe = static_cast<int>(z - era * 146097);
  const int yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  std::int64_t y = yoe + era * 400;
  const int doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const int mp = (5 * doy + 2) / 153;
  const int d = doy - (153 * mp + 2) / 5 + 1;
  const int m = mp + (mp < 10 ? 3 : -9);
  y += (m <= 2);
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%04lld-%02d-%02dT%02lld:%02lld:%02lldZ",
                static_cast<long long>(y), m, d,
                static_cast<long long>(rem / 3600),
                static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

std::vector<PullRequest> parse_jsonl(std::istream& in, const std::string& origin) {
  std::vector<PullRequest> prs;
  std::unordered_set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::string where = origin + ":" + std::to_string(line_no);
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw DataError(where + ": malformed JSON");
    PullRequest pr = pr_from_json(j, where);
    if (!seen.insert(pr.id).second)
      throw DataError(where + ": duplicate PR id '" + pr.id + "'");
    prs.push_back(std::move(pr));
  }
  return prs;
}

std::vector<PullRequest> ingest_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file: " + path);
  return parse_jsonl(in, path);
}

void write_jsonl(const std::vector<PullRequest>& prs, std::ostream& out) {
  for (const auto& pr : prs) out << pr_to_json(pr).dump() << '\n';
}

void write_jsonl(const std::vector<PullRequest>& prs, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  write_jsonl(prs, out);
}

PullRequest parse_pr_json(const std::string& json_text, const std::string& origin) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw DataError(origin + ": malformed JSON");
  return pr_from_json(j, origin);
}

}  // namespace tima
