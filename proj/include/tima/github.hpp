#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tima/errors.hpp"
#include "tima/pull_request.hpp"

namespace tima {

/// HTTP-level failure; callers may retry.
class HttpError : public DataError {
 public:
  HttpError(int status, const std::string& what) : DataError(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

/// Invalid or missing credentials.
class AuthError : public DataError {
 public:
  using DataError::DataError;
};

/// API quota exhausted; carries the epoch second the quota resets at.
class RateLimitError : public DataError {
 public:
  RateLimitError(std::int64_t reset_at, const std::string& what)
      : DataError(what), reset_at_(reset_at) {}
  std::int64_t reset_at() const { return reset_at_; }

 private:
  std::int64_t reset_at_;
};

struct GithubOptions {
  std::string api_base = "https://api.github.com";
  std::string token;  // empty = unauthenticated
  int per_page = 100;
};

/// Downloads every closed PR of `owner/name`, walking all pages, and derives
/// each PR's reviewer set from its issue and review comments: a collaborator
/// reviewed a PR when they commented on it and are not its submitter. The
/// result round-trips through the JSONL format, so everything after this
/// call can run offline.
std::vector<PullRequest> fetch_github(const std::string& repo,
                                      const GithubOptions& opts);

}  // namespace tima
