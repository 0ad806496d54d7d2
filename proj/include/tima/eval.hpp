#pragma once

#include <Eigen/Core>
#include <cmath>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tima/errors.hpp"
#include "tima/lda.hpp"
#include "tima/matcher.hpp"
#include "tima/pull_request.hpp"
#include "tima/text_prep.hpp"

namespace tima {

/// Fraction of matched candidates that really reviewed the PR, and fraction
/// of actual reviewers that were matched.
std::pair<double, double> precision_recall(const std::set<std::string>& core_reviewers,
                                           const std::set<std::string>& match_set);

/// Sorts by closed_at (ties broken by id) and takes the most recent
/// ceil(n * test_fraction) PRs as the test set, so no test PR predates a
/// training PR.
std::pair<std::vector<PullRequest>, std::vector<PullRequest>> chronological_split(
    std::vector<PullRequest> prs, double test_fraction);

/// Jensen-Shannon divergence with base-2 logarithms: the mean of the two KL
/// divergences against the midpoint distribution. Symmetric, zero iff the
/// inputs are equal, and bounded by one. Inputs must be equal-length
/// distributions (entries >= 0, sums within 1e-6 of one).
template <typename DerivedP, typename DerivedQ>
double js_divergence(const Eigen::MatrixBase<DerivedP>& p_expr,
                     const Eigen::MatrixBase<DerivedQ>& q_expr) {
  const Eigen::VectorXd p = p_expr.derived().template cast<double>();
  const Eigen::VectorXd q = q_expr.derived().template cast<double>();
  if (p.size() != q.size())
    throw DataError("js_divergence: length mismatch");
  if ((p.array() < 0.0).any() || (q.array() < 0.0).any())
    throw DataError("js_divergence: negative entry");
  if (std::abs(p.sum() - 1.0) > 1e-6 || std::abs(q.sum() - 1.0) > 1e-6)
    throw DataError("js_divergence: inputs must sum to one");
  double kl_p = 0.0;
  double kl_q = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const double mid = 0.5 * (p(i) + q(i));
    if (p(i) > 0.0) kl_p += p(i) * std::log2(p(i) / mid);
    if (q(i) > 0.0) kl_q += q(i) * std::log2(q(i) / mid);
  }
  return 0.5 * (kl_p + kl_q);
}

struct PrMetrics {
  std::string pr_id;
  double precision = 0.0;
  double recall = 0.0;
  std::set<std::string> core_reviewers;
  std::set<std::string> candidates;
};

struct EvalReport {
  std::vector<PrMetrics> per_pr;  // test PRs with reviewers, scored
  double mean_precision = 0.0;    // macro average over per_pr
  double mean_recall = 0.0;
  std::string split_spec;
  int k = 0;
  int train_count = 0;
  int test_count = 0;
  std::vector<std::string> no_signal;   // test PRs with no in-vocabulary token
  std::vector<std::string> empty_core;  // test PRs with no reviewers
  int unreachable_core_count = 0;  // scored PRs whose reviewers never trained
};

struct EvalOptions {
  PrepConfig prep = default_prep_config();
  double tie_tolerance = kDefaultTieTolerance;
};

/// Full pipeline measurement: chronological split, corpus + model + relation
/// matrix from the training side, fold-in and matching on the test side,
/// macro-averaged precision and recall. Test PRs that cannot be folded in
/// are reported in `no_signal` rather than silently dropped.
EvalReport run_evaluation(const std::vector<PullRequest>& prs, const LdaConfig& cfg,
                          double test_fraction, const EvalOptions& opts = {});

struct DivergenceStudy {
  double mean = 0.0;
  std::vector<std::pair<std::string, double>> per_doc;  // (pr id, divergence)
  std::vector<std::string> skipped;  // test PRs with no tokens after prep
};

/// How far the cheap fold-in estimate sits from full inference: retrains one
/// model with the test PRs appended, folds each test PR through that model's
/// word-topic rows, and measures the divergence against the theta row the
/// sampler assigned to the same document. Both distributions live in the
/// same topic space, so the number isolates the estimation gap.
DivergenceStudy divergence_study(const std::vector<PullRequest>& prs,
                                 const LdaConfig& cfg, double test_fraction,
                                 const EvalOptions& opts = {});

void print_report_table(const EvalReport& report, std::ostream& out);
void write_report_json(const EvalReport& report, std::ostream& out);

/// One `k,mean_precision,mean_recall` row per report.
void write_sweep_csv(const std::vector<EvalReport>& reports, std::ostream& out);

}  // namespace tima
