#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tima/pull_request.hpp"
#include "tima/text_prep.hpp"

namespace tima {

/// Bijection between words and dense integer ids.
class Vocabulary {
 public:
  /// Returns the id of `word`, inserting it if unseen.
  int add(const std::string& word);
  std::optional<int> find(const std::string& word) const;
  const std::string& word(int id) const;
  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<std::string>& words() const { return words_; }

  /// Hash over words in id order; binds models to the vocabulary.
  std::uint64_t hash() const;

  bool operator==(const Vocabulary& other) const {
    return words_ == other.words_;
  }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> index_;
};

/// One preprocessed PR: its surviving tokens as vocabulary ids.
struct Document {
  std::string pr_id;
  std::vector<int> tokens;

  int n_words() const { return static_cast<int>(tokens.size()); }
  bool operator==(const Document&) const = default;
};

/// Preprocessed training set: documents, vocabulary, the collaborator roster
/// (sorted union of reviewers over the documents) and per-document reviewer
/// labels as roster indices.
struct Corpus {
  std::vector<Document> documents;
  Vocabulary vocab;
  std::vector<std::string> roster;
  std::vector<std::vector<int>> review_labels;  // sorted indices per document

  int doc_count() const { return static_cast<int>(documents.size()); }
  std::int64_t total_tokens() const;
  Eigen::VectorXd doc_lengths() const;

  bool operator==(const Corpus&) const = default;
};

/// What build_corpus kept and dropped.
struct CorpusBuildReport {
  int input_prs = 0;
  std::vector<std::string> skipped_no_reviewer;  // PR ids without reviewers
  std::vector<std::string> dropped_empty;        // PR ids empty after prep
};

/// Builds a training corpus from labeled PRs. PRs without reviewers and PRs
/// whose text preprocesses to nothing are left out and reported.
Corpus build_corpus(const std::vector<PullRequest>& prs, const PrepConfig& prep,
                    CorpusBuildReport* report = nullptr);

/// Throws InternalError if the corpus breaks its own invariants.
void check_corpus(const Corpus& corpus);

/// Directory layout: meta.json, vocab.txt (line number = id), docs.txt (one
/// space-separated token-id row per document), labels.txt (one
/// space-separated collaborator-index row per document).
void save_corpus(const Corpus& corpus, const PrepConfig& prep,
                 const std::string& dir,
                 const CorpusBuildReport* report = nullptr);

struct LoadedCorpus {
  Corpus corpus;
  PrepConfig prep;
};
LoadedCorpus load_corpus(const std::string& dir);

}  // namespace tima
