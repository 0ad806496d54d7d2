#include "tima/lda.hpp"

#include <cmath>
#include <string>

#include "tima/errors.hpp"

namespace tima {

void validate(const LdaConfig& cfg) {
  if (cfg.k < 2) throw UsageError("k must be >= 2");
  if (!(cfg.alpha > 0.0)) throw UsageError("alpha must be > 0");
  if (!(cfg.beta > 0.0)) throw UsageError("beta must be > 0");
  if (cfg.iterations < 1) throw UsageError("iterations must be >= 1");
}

void check_model(const LdaModel& model) {
  auto check_rows = [](const Eigen::MatrixXd& m, const char* name) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      double sum = m.row(i).sum();
      if (std::abs(sum - 1.0) > 1e-9)
        throw InternalError(std::string(name) + " row " + std::to_string(i) +
                            " sums to " + std::to_string(sum));
      if ((m.row(i).array() <= 0.0).any())
        throw InternalError(std::string(name) + " row " + std::to_string(i) +
                            " has a non-positive entry");
    }
  };
  check_rows(model.theta, "theta");
  check_rows(model.phi, "phi");
}

GibbsSampler::GibbsSampler(const Corpus& corpus, const LdaConfig& cfg)
    : cfg_(cfg),
      vocab_size_(corpus.vocab.size()),
      rng_(cfg.seed),
      vocab_hash_(corpus.vocab.hash()) {
  validate(cfg);
  if (corpus.documents.empty()) throw DataError("corpus has no documents");
  for (const auto& doc : corpus.documents)
    if (doc.tokens.empty())
      throw DataError("document " + doc.pr_id + " has no tokens");
  if (static_cast<std::int64_t>(cfg.k) > corpus.total_tokens())
    throw DataError("degenerate model: more topics than tokens in the corpus");

  const int d_count = corpus.doc_count();
  docs_.reserve(static_cast<std::size_t>(d_count));
  for (const auto& doc : corpus.documents) docs_.push_back(doc.tokens);

  n_dk_ = Eigen::MatrixXi::Zero(d_count, cfg_.k);
  n_kw_ = Eigen::MatrixXi::Zero(cfg_.k, vocab_size_);
  n_k_ = Eigen::VectorXi::Zero(cfg_.k);
  cumulative_.resize(static_cast<std::size_t>(cfg_.k));

  assign_.resize(docs_.size());
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    assign_[d].resize(docs_[d].size());
    for (std::size_t j = 0; j < docs_[d].size(); ++j) {
      int k = static_cast<int>(rng_.below(static_cast<std::uint32_t>(cfg_.k)));
      assign_[d][j] = k;
      n_dk_(static_cast<Eigen::Index>(d), k) += 1;
      n_kw_(k, docs_[d][j]) += 1;
      n_k_(k) += 1;
    }
  }
}

void GibbsSampler::sweep() {
  const double v_beta = vocab_size_ * cfg_.beta;
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    const auto di = static_cast<Eigen::Index>(d);
    for (std::size_t j = 0; j < docs_[d].size(); ++j) {
      const int w = docs_[d][j];
      const int old_k = assign_[d][j];
      n_dk_(di, old_k) -= 1;
      n_kw_(old_k, w) -= 1;
      n_k_(old_k) -= 1;

      double total = 0.0;
      for (int k = 0; k < cfg_.k; ++k) {
        double weight = (n_kw_(k, w) + cfg_.beta) / (n_k_(k) + v_beta) *
                        (n_dk_(di, k) + cfg_.alpha);
        total += weight;
        cumulative_[static_cast<std::size_t>(k)] = total;
      }
      const double u = rng_.unit() * total;
      int new_k = 0;
      while (new_k < cfg_.k - 1 &&
             cumulative_[static_cast<std::size_t>(new_k)] <= u)
        ++new_k;

      assign_[d][j] = new_k;
      n_dk_(di, new_k) += 1;
      n_kw_(new_k, w) += 1;
      n_k_(new_k) += 1;
    }
  }
  ++sweeps_done_;
#ifndef NDEBUG
  check_counts();
#endif
}

void GibbsSampler::check_counts() const {
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    if (n_dk_.row(static_cast<Eigen::Index>(d)).sum() !=
        static_cast<int>(docs_[d].size()))
      throw InternalError("sampler: document topic counts do not sum to N_d");
  }
  for (int k = 0; k < cfg_.k; ++k) {
    if (n_kw_.row(k).sum() != n_k_(k))
      throw InternalError("sampler: topic word counts do not sum to n_k");
  }
}

Eigen::MatrixXd GibbsSampler::estimate_theta() const {
  const auto d_count = n_dk_.rows();
  Eigen::MatrixXd theta(d_count, cfg_.k);
  for (Eigen::Index d = 0; d < d_count; ++d) {
    const double n_d = static_cast<double>(docs_[static_cast<std::size_t>(d)].size());
    theta.row(d) = (n_dk_.row(d).cast<double>().array() + cfg_.alpha) /
                   (n_d + cfg_.k * cfg_.alpha);
  }
  return theta;
}

Eigen::MatrixXd GibbsSampler::estimate_phi() const {
  const double v_beta = vocab_size_ * cfg_.beta;
  Eigen::MatrixXd phi(cfg_.k, vocab_size_);
  for (int k = 0; k < cfg_.k; ++k)
    phi.row(k) = (n_kw_.row(k).cast<double>().array() + cfg_.beta) /
                 (n_k_(k) + v_beta);
  return phi;
}

LdaModel GibbsSampler::model() const {
  LdaModel m;
  m.theta = estimate_theta();
  m.phi = estimate_phi();
  m.config = cfg_;
  m.vocab_hash = vocab_hash_;
  return m;
}

LdaModel train(const Corpus& corpus, const LdaConfig& cfg) {
  GibbsSampler sampler(corpus, cfg);
  for (int it = 0; it < cfg.iterations; ++it) sampler.sweep();
  LdaModel model = sampler.model();
  check_model(model);
  return model;
}

double log_likelihood(const LdaModel& model, const Corpus& corpus) {
  if (model.vocab_hash != corpus.vocab.hash())
    throw DataError("model was trained on a different vocabulary");
  if (model.doc_count() != corpus.doc_count())
    throw DataError("model and corpus disagree on document count");
  double sum = 0.0;
  for (int d = 0; d < corpus.doc_count(); ++d) {
    const auto& doc = corpus.documents[static_cast<std::size_t>(d)];
    for (int w : doc.tokens)
      sum += std::log(model.theta.row(d).dot(model.phi.col(w).transpose()));
  }
  if (!std::isfinite(sum))
    throw InternalError("log-likelihood is not finite");
  return sum;
}

}  // namespace tima
