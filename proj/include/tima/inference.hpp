#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "tima/corpus.hpp"
#include "tima/lda.hpp"
#include "tima/pull_request.hpp"
#include "tima/text_prep.hpp"

namespace tima {

/// Topic distribution of one (usually unseen) PR.
struct TopicDistribution {
  Eigen::VectorXd probs;  // length K, sums to one
  std::string pr_id;
  int oov_count = 0;  // tokens dropped as out-of-vocabulary
};

/// Estimates a new document's topic distribution from its in-vocabulary word
/// counts and the trained word-topic rows:
///
///   p(topic i) = sum_w c(w) phi(i, w) / sum_k sum_w c(w) phi(k, w)
///
/// No sampling is involved, so the result is deterministic and depends only
/// on the counts. Throws DataError when no token is in the vocabulary.
TopicDistribution fold_in_counts(const Eigen::Ref<const Eigen::VectorXd>& word_counts,
                                 const LdaModel& model);

/// Preprocesses the PR text, counts in-vocabulary stems and folds them
/// through the model. Out-of-vocabulary stems are dropped and counted.
TopicDistribution fold_in(const PullRequest& pr, const LdaModel& model,
                          const Vocabulary& vocab, const PrepConfig& prep);

/// Result of retraining with new PRs appended to the corpus.
struct RetrainResult {
  LdaModel model;                             // trained on corpus + new docs
  std::vector<TopicDistribution> distributions;  // theta rows of the new docs
  Vocabulary vocab;                           // vocabulary after extension
};

/// The expensive alternative to fold_in: append the new PRs to the corpus
/// (extending the vocabulary with their unseen stems), train from scratch
/// and read the new documents' theta rows off the model. Used only to
/// measure how close fold_in comes to full inference.
RetrainResult retrain_with(const std::vector<PullRequest>& new_prs,
                           const Corpus& corpus, const LdaConfig& cfg,
                           const PrepConfig& prep);

}  // namespace tima
