#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tima {

/// One closed pull request as mined from a project's history.
///
/// A collaborator who reviewed the PR (left at least one comment and is not
/// the submitter) counts as one of its integrators; those ids live in
/// `reviewers`. PRs without reviewers can be matched but never train.
struct PullRequest {
  std::string id;
  std::string title;
  std::string description;
  std::vector<std::string> comments;  // comment bodies, oldest first
  std::string submitter;
  std::set<std::string> reviewers;
  std::int64_t closed_at = 0;  // seconds since the Unix epoch, UTC

  bool operator==(const PullRequest&) const = default;
};

/// Title, description and comments joined into one text blob, in that order.
std::string concatenated_text(const PullRequest& pr);

/// Reads one PR object per line. Duplicate ids and malformed lines are
/// reported with their line number.
std::vector<PullRequest> ingest_jsonl(const std::string& path);
std::vector<PullRequest> parse_jsonl(std::istream& in, const std::string& origin);

void write_jsonl(const std::vector<PullRequest>& prs, const std::string& path);
void write_jsonl(const std::vector<PullRequest>& prs, std::ostream& out);

/// Parses a single PR object (the JSONL record shape).
PullRequest parse_pr_json(const std::string& json_text, const std::string& origin);

/// RFC 3339 timestamp helpers. Offsets are normalized to UTC; fractional
/// seconds are accepted and discarded.
std::int64_t parse_rfc3339(std::string_view ts);
std::string format_rfc3339(std::int64_t epoch_seconds);

}  // namespace tima
