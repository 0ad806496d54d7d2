#include "tima/github.hpp"

#include <algorithm>
#include <httplib.h>
#include <json.hpp>

namespace tima {

namespace {

using nlohmann::json;

struct Comment {
  std::int64_t created_at;
  std::string author;
  std::string body;
};

class Api {
 public:
  explicit Api(const GithubOptions& opts) : opts_(opts), client_(opts.api_base) {
    client_.set_connection_timeout(30);
    client_.set_read_timeout(60);
    client_.set_follow_location(true);
  }

  json get_json(const std::string& path) {
    httplib::Headers headers{{"Accept", "application/vnd.github+json"},
                             {"User-Agent", "tima"}};
    if (!opts_.token.empty())
      headers.emplace("Authorization", "token " + opts_.token);
    auto res = client_.Get(path, headers);
    if (!res)
      throw HttpError(0, "connection to " + opts_.api_base + " failed: " +
                             httplib::to_string(res.error()));
    if (res->status == 401)
      throw AuthError("authentication failed (HTTP 401) for " + path);
    if (res->status == 403 && res->get_header_value("X-RateLimit-Remaining") == "0") {
      std::int64_t reset = 0;
      try {
        reset = std::stoll(res->get_header_value("X-RateLimit-Reset"));
      } catch (...) {
      }
      throw RateLimitError(reset, "rate limit exhausted; resets at epoch " +
                                      std::to_string(reset));
    }
    if (res->status != 200)
      throw HttpError(res->status,
                      "HTTP " + std::to_string(res->status) + " for " + path);
    json j = json::parse(res->body, nullptr, false);
    if (j.is_discarded()) throw DataError("malformed JSON from " + path);
    return j;
  }

  // Follows page= pagination until a page comes back empty or short.
  json get_paged(const std::string& path_and_query) {
    json all = json::array();
    for (int page = 1;; ++page) {
      json chunk = get_json(path_and_query + "&per_page=" +
                            std::to_string(opts_.per_page) +
                            "&page=" + std::to_string(page));
      if (!chunk.is_array())
        throw DataError("expected a JSON array from " + path_and_query);
      for (auto& item : chunk) all.push_back(std::move(item));
      if (static_cast<int>(chunk.size()) < opts_.per_page) break;
    }
    return all;
  }

 private:
  GithubOptions opts_;
  httplib::Client client_;
};

std::string json_string_or(const json& j, const char* key, const std::string& fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  return it->get<std::string>();
}

std::vector<Comment> parse_comments(const json& arr) {
  std::vector<Comment> out;
  for (const auto& c : arr) {
    Comment comment;
    comment.body = json_string_or(c, "body", "");
    if (c.contains("user") && c["user"].is_object())
      comment.author = json_string_or(c["user"], "login", "");
    std::string created = json_string_or(c, "created_at", "");
    comment.created_at = created.empty() ? 0 : parse_rfc3339(created);
    out.push_back(std::move(comment));
  }
  return out;
}

}  // namespace

std::vector<PullRequest> fetch_github(const std::string& repo,
                                      const GithubOptions& opts) {
  auto slash = repo.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == repo.size())
    throw UsageError("repository must be given as owner/name, got: " + repo);

  Api api(opts);
  json pulls = api.get_paged("/repos/" + repo + "/pulls?state=closed");

  std::vector<PullRequest> prs;
  prs.reserve(pulls.size());
  for (const auto& p : pulls) {
    if (!p.contains("number")) throw DataError("PR record without a number");
    const std::string number = std::to_string(p["number"].get<std::int64_t>());
    std::string closed = json_string_or(p, "closed_at", "");
    if (closed.empty()) continue;  // still open; state=closed should not send these

    PullRequest pr;
    pr.id = number;
    pr.title = json_string_or(p, "title", "");
    pr.description = json_string_or(p, "body", "");
    if (p.contains("user") && p["user"].is_object())
      pr.submitter = json_string_or(p["user"], "login", "");
    pr.closed_at = parse_rfc3339(closed);

    // Discussion comments live on the issue endpoint, inline code comments
    // on the review endpoint; both count as review activity.
    std::vector<Comment> comments =
        parse_comments(api.get_paged("/repos/" + repo + "/issues/" + number +
                                     "/comments?"));
    std::vector<Comment> review_comments =
        parse_comments(api.get_paged("/repos/" + repo + "/pulls/" + number +
                                     "/comments?"));
    comments.insert(comments.end(),
                    std::make_move_iterator(review_comments.begin()),
                    std::make_move_iterator(review_comments.end()));
    std::stable_sort(comments.begin(), comments.end(),
                     [](const Comment& a, const Comment& b) {
                       return a.created_at < b.created_at;
                     });
    for (auto& c : comments) {
      pr.comments.push_back(std::move(c.body));
      if (!c.author.empty() && c.author != pr.submitter)
        pr.reviewers.insert(c.author);
    }
    prs.push_back(std::move(pr));
  }
  return prs;
}

}  // namespace tima
