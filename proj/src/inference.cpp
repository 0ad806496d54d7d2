#include "tima/inference.hpp"

#include <cmath>

#include "tima/errors.hpp"

namespace tima {

TopicDistribution fold_in_counts(const Eigen::Ref<const Eigen::VectorXd>& word_counts,
                                 const LdaModel& model) {
  if (word_counts.size() != model.vocab_size())
    throw DataError("fold-in counts do not match the model vocabulary size");
  if ((word_counts.array() < 0.0).any())
    throw DataError("fold-in counts must be non-negative");
  if (word_counts.sum() <= 0.0)
    throw DataError("no in-vocabulary tokens: topic distribution undefined");

  TopicDistribution dist;
  Eigen::VectorXd mass = model.phi * word_counts;  // K
  const double total = mass.sum();
  if (!(total > 0.0) || !std::isfinite(total))
    throw InternalError("fold-in: degenerate topic mass");
  dist.probs = mass / total;
  return dist;
}

TopicDistribution fold_in(const PullRequest& pr, const LdaModel& model,
                          const Vocabulary& vocab, const PrepConfig& prep) {
  if (model.vocab_hash != vocab.hash())
    throw DataError("model was trained on a different vocabulary");
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(vocab.size());
  int oov = 0;
  for (const std::string& stem : preprocess(concatenated_text(pr), prep)) {
    if (auto id = vocab.find(stem))
      counts(*id) += 1.0;
    else
      ++oov;
  }
  if (counts.sum() <= 0.0)
    throw DataError("PR '" + pr.id +
                    "' has no in-vocabulary tokens: topic distribution undefined");
  TopicDistribution dist = fold_in_counts(counts, model);
  dist.pr_id = pr.id;
  dist.oov_count = oov;
  return dist;
}

RetrainResult retrain_with(const std::vector<PullRequest>& new_prs,
                           const Corpus& corpus, const LdaConfig& cfg,
                           const PrepConfig& prep) {
  Corpus extended = corpus;
  for (const auto& pr : new_prs) {
    std::vector<std::string> stems = preprocess(concatenated_text(pr), prep);
    if (stems.empty())
      throw DataError("PR '" + pr.id + "' has no tokens after preprocessing");
    Document doc;
    doc.pr_id = pr.id;
    doc.tokens.reserve(stems.size());
    for (const auto& s : stems) doc.tokens.push_back(extended.vocab.add(s));
    extended.documents.push_back(std::move(doc));
    extended.review_labels.emplace_back();  // unlabeled; only theta is wanted
  }

  RetrainResult result;
  result.model = train(extended, cfg);
  result.vocab = extended.vocab;
  const int base = corpus.doc_count();
  result.distributions.reserve(new_prs.size());
  for (std::size_t i = 0; i < new_prs.size(); ++i) {
    TopicDistribution dist;
    dist.probs = result.model.theta.row(base + static_cast<int>(i));
    dist.pr_id = new_prs[i].id;
    result.distributions.push_back(std::move(dist));
  }
  return result;
}

}  // namespace tima
