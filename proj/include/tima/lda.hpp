#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "tima/corpus.hpp"
#include "tima/rng.hpp"

namespace tima {

/// Hyperparameters and run settings for LDA training.
///
/// The defaults mirror the common Gibbs-sampling setup this pipeline was
/// tuned against: symmetric priors alpha = 50/K and beta = 0.1, 1000 sweeps,
/// 15 topics.
struct LdaConfig {
  int k = 15;
  double alpha = 50.0 / 15.0;
  double beta = 0.1;
  int iterations = 1000;
  std::uint64_t seed = 1;

  static LdaConfig defaults(int k = 15) {
    LdaConfig cfg;
    cfg.k = k;
    cfg.alpha = 50.0 / k;
    return cfg;
  }
};

void validate(const LdaConfig& cfg);

/// A trained topic model: per-document topic distributions (theta, D x K)
/// and per-topic word distributions (phi, K x V). Rows are smoothed by the
/// Dirichlet priors, so every entry is strictly positive and every row sums
/// to one.
struct LdaModel {
  Eigen::MatrixXd theta;
  Eigen::MatrixXd phi;
  LdaConfig config;
  std::uint64_t vocab_hash = 0;

  int k() const { return static_cast<int>(phi.rows()); }
  int vocab_size() const { return static_cast<int>(phi.cols()); }
  int doc_count() const { return static_cast<int>(theta.rows()); }
};

/// Throws InternalError if a model row fails its normalization or
/// positivity guarantee.
void check_model(const LdaModel& model);

/// Collapsed Gibbs sampler over token-topic assignments.
///
/// Construction draws a seeded random assignment; each sweep() resamples
/// every token once, in document order, from the full conditional
///
///   p(z = k) proportional to (n_kw + beta) / (n_k + V beta) * (n_dk + alpha)
///
/// with the token's own assignment removed from the counts. The visit order
/// is fixed, so a given (corpus, config) pair always yields the same chain.
class GibbsSampler {
 public:
  GibbsSampler(const Corpus& corpus, const LdaConfig& cfg);

  void sweep();
  int sweeps_done() const { return sweeps_done_; }

  Eigen::MatrixXd estimate_theta() const;
  Eigen::MatrixXd estimate_phi() const;
  LdaModel model() const;

  const Eigen::MatrixXi& doc_topic_counts() const { return n_dk_; }
  const Eigen::MatrixXi& topic_word_counts() const { return n_kw_; }
  const Eigen::VectorXi& topic_totals() const { return n_k_; }

  /// Verifies count conservation against the immutable corpus shape.
  void check_counts() const;

 private:
  LdaConfig cfg_;
  int vocab_size_;
  std::vector<std::vector<int>> docs_;    // token ids per document
  std::vector<std::vector<int>> assign_;  // topic assignment per token
  Eigen::MatrixXi n_dk_;                  // D x K
  Eigen::MatrixXi n_kw_;                  // K x V (column per word)
  Eigen::VectorXi n_k_;                   // K
  Rng rng_;
  std::vector<double> cumulative_;        // scratch for sampling
  std::uint64_t vocab_hash_;
  int sweeps_done_ = 0;
};

/// Runs the sampler for cfg.iterations sweeps and reads the model off the
/// final state.
LdaModel train(const Corpus& corpus, const LdaConfig& cfg);

/// Sum over tokens of log p(word | document) under the model. Finite and
/// negative for any smoothed model; useful as a convergence trace.
double log_likelihood(const LdaModel& model, const Corpus& corpus);

}  // namespace tima
