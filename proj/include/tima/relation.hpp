#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "tima/corpus.hpp"
#include "tima/errors.hpp"
#include "tima/lda.hpp"

namespace tima {

/// Collaborator-topic relevance derived from review history.
///
/// `raw_relevance(i, j)` is the length-weighted mean topic-j probability over
/// exactly the documents collaborator i reviewed; `matrix` is the same thing
/// normalized per collaborator so each row sums to one; `expertise(i)` is
/// collaborator i's share of all review labels.
struct RelationMatrix {
  Eigen::MatrixXd matrix;         // R x K, rows on the simplex
  Eigen::MatrixXd raw_relevance;  // R x K, entries in [0, 1]
  Eigen::VectorXd expertise;      // R, sums to one
  std::vector<std::string> roster;
  int k = 0;

  int collaborator_count() const { return static_cast<int>(roster.size()); }
};

/// Corpus-level topic weight: the mean of theta rows weighted by document
/// length. Sums to one.
Eigen::VectorXd topic_importance(const LdaModel& model, const Corpus& corpus);

/// Per-collaborator topic relevance: the length-weighted mean theta over the
/// documents each collaborator reviewed. A collaborator with no reviewed
/// document has no defined row and is reported as an error.
Eigen::MatrixXd relevance(const LdaModel& model, const Corpus& corpus);

/// Scales each row to sum to one. Rows with a non-positive sum are an
/// internal error (smoothed inputs keep every entry strictly positive).
template <typename Derived>
Eigen::MatrixXd normalize_rows(const Eigen::MatrixBase<Derived>& raw) {
  Eigen::MatrixXd out(raw.rows(), raw.cols());
  for (Eigen::Index i = 0; i < raw.rows(); ++i) {
    const double sum = raw.row(i).sum();
    if (!(sum > 0.0))
      throw InternalError("normalize_rows: row " + std::to_string(i) +
                          " has non-positive sum");
    out.row(i) = raw.row(i) / sum;
  }
  return out;
}

/// Share of review labels held by each collaborator: reviewing more PRs
/// means more expertise. One label per (document, reviewer) pair.
Eigen::VectorXd compute_expertise(const Corpus& corpus);

/// Composes relevance, normalization and expertise for a trained model.
RelationMatrix build_relation(const LdaModel& model, const Corpus& corpus);

void check_relation(const RelationMatrix& rm);

}  // namespace tima
