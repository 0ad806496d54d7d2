// Generates a synthetic closed-PR dataset for demos, benchmarks and the
// bundled evaluation fixtures (data/sample_prs.jsonl). Each PR draws most of
// its words from one themed vocabulary and is reviewed by that theme's
// owner, sometimes joined by a generalist or another owner, so the dataset
// has learnable topic-reviewer structure without shipping real project data.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "tima/pull_request.hpp"
#include "tima/rng.hpp"

namespace {

using tima::PullRequest;
using tima::Rng;

const std::vector<std::vector<std::string>> kTopicWords = {
    {"parser", "grammar", "lexer", "syntax", "bracket", "operand", "literal",
     "expression", "statement", "keyword", "delimiter", "quote", "escape",
     "newline", "semicolon", "identifier", "precedence", "lookahead",
     "recursion", "parse"},
    {"socket", "packet", "timeout", "proxy", "latency", "route", "firewall",
     "bandwidth", "datagram", "dns", "tcp", "udp", "retry", "download",
     "upload", "gateway", "congestion", "throughput", "ping", "broadcast"},
    {"button", "widget", "layout", "render", "pixel", "font", "color", "theme",
     "icon", "menu", "dialog", "scroll", "cursor", "canvas", "tooltip",
     "checkbox", "slider", "viewport", "animation", "opacity"},
    {"query", "schema", "transaction", "rollback", "migration", "join",
     "column", "table", "record", "snapshot", "replica", "shard", "vacuum",
     "cache", "checkpoint", "durability", "lock", "btree", "persistence",
     "cardinality"},
    {"compile", "linker", "dependency", "artifact", "pipeline", "docker",
     "release", "version", "tag", "bundle", "script", "install", "package",
     "publish", "manifest", "toolchain", "target", "workflow", "runner",
     "incremental"},
    {"cipher", "signature", "nonce", "certificate", "entropy", "digest",
     "salt", "encrypt", "decrypt", "vault", "seal", "padding", "curve",
     "prime", "modulus", "keypair", "verify", "secret", "audit", "handshake"},
};

const std::vector<std::string> kFillerWords = {
    "fix",      "bug",     "issue",   "crash",         "test",
    "merge",    "branch",  "commit",  "change",        "support",
    "refactor", "cleanup", "typo",    "documentation", "example",
    "warning",  "log",     "user",    "feature",       "request"};

const std::vector<std::string> kOwners = {"alice",  "bruno", "carla",
                                          "dmitri", "elena", "felix"};
const std::vector<std::string> kGeneralists = {"grace", "henrik"};

std::string sample_words(Rng& rng, int topic, int count, double topic_share) {
  std::string text;
  for (int i = 0; i < count; ++i) {
    const std::vector<std::string>& pool =
        rng.unit() < topic_share ? kTopicWords[static_cast<std::size_t>(topic)]
                                 : kFillerWords;
    if (i > 0) text += ' ';
    text += pool[rng.below(static_cast<std::uint32_t>(pool.size()))];
  }
  return text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate a synthetic PR dataset with planted topic structure"};
  int docs = 220;
  std::uint64_t seed = 7;
  std::string out;
  app.add_option("--docs", docs, "number of PRs (default 220)");
  app.add_option("--seed", seed, "RNG seed (default 7)");
  app.add_option("--out", out, "output JSONL path")->required();
  CLI11_PARSE(app, argc, argv);

  Rng rng(seed);
  std::vector<PullRequest> prs;
  prs.reserve(static_cast<std::size_t>(docs));
  const std::int64_t start = tima::parse_rfc3339("2016-01-01T00:00:00Z");
  const int n_topics = static_cast<int>(kTopicWords.size());

  for (int i = 0; i < docs; ++i) {
    const int topic = static_cast<int>(rng.below(static_cast<std::uint32_t>(n_topics)));
    PullRequest pr;
    pr.id = std::to_string(i + 1);
    pr.title = sample_words(rng, topic, 4 + static_cast<int>(rng.below(3)), 0.7);
    pr.description = sample_words(rng, topic, 15 + static_cast<int>(rng.below(16)), 0.85);
    const int n_comments = static_cast<int>(rng.below(4));
    for (int c = 0; c < n_comments; ++c)
      pr.comments.push_back(
          sample_words(rng, topic, 6 + static_cast<int>(rng.below(7)), 0.8));
    pr.submitter = "contrib" + std::to_string(1 + rng.below(40));
    pr.reviewers.insert(kOwners[static_cast<std::size_t>(topic)]);
    if (rng.unit() < 0.35)
      pr.reviewers.insert(kGeneralists[rng.below(2)]);
    if (rng.unit() < 0.12)
      pr.reviewers.insert(kOwners[rng.below(static_cast<std::uint32_t>(n_topics))]);
    pr.closed_at = start + static_cast<std::int64_t>(i) * 7200;
    prs.push_back(std::move(pr));
  }

  tima::write_jsonl(prs, out);
  std::cout << "wrote " << prs.size() << " PRs to " << out << "\n";
  return 0;
}
