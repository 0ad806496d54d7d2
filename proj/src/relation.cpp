#include "tima/relation.hpp"

#include <cmath>

namespace tima {

namespace {

void require_match(const LdaModel& model, const Corpus& corpus) {
  if (model.vocab_hash != corpus.vocab.hash())
    throw DataError("model was trained on a different vocabulary");
  if (model.doc_count() != corpus.doc_count())
    throw DataError("model and corpus disagree on document count");
}

}  // namespace

Eigen::VectorXd topic_importance(const LdaModel& model, const Corpus& corpus) {
  require_match(model, corpus);
  if (corpus.documents.empty()) throw DataError("corpus has no documents");
  const Eigen::VectorXd lengths = corpus.doc_lengths();
  return model.theta.transpose() * lengths / lengths.sum();
}

Eigen::MatrixXd relevance(const LdaModel& model, const Corpus& corpus) {
  require_match(model, corpus);
  const int r_count = static_cast<int>(corpus.roster.size());
  Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(r_count, model.k());
  Eigen::VectorXd weight = Eigen::VectorXd::Zero(r_count);
  for (int d = 0; d < corpus.doc_count(); ++d) {
    const double n_d = corpus.documents[static_cast<std::size_t>(d)].n_words();
    for (int r : corpus.review_labels[static_cast<std::size_t>(d)]) {
      raw.row(r) += n_d * model.theta.row(d);
      weight(r) += n_d;
    }
  }
  for (int r = 0; r < r_count; ++r) {
    if (weight(r) == 0.0)
      throw DataError("collaborator '" + corpus.roster[static_cast<std::size_t>(r)] +
                      "' reviewed no training document");
    raw.row(r) /= weight(r);
  }
  return raw;
}

Eigen::VectorXd compute_expertise(const Corpus& corpus) {
  const int r_count = static_cast<int>(corpus.roster.size());
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(r_count);
  double total = 0.0;
  for (const auto& labels : corpus.review_labels) {
    for (int r : labels) {
      counts(r) += 1.0;
      total += 1.0;
    }
  }
  if (total == 0.0) throw DataError("corpus has no review labels");
  return counts / total;
}

RelationMatrix build_relation(const LdaModel& model, const Corpus& corpus) {
  RelationMatrix rm;
  rm.raw_relevance = relevance(model, corpus);
  rm.matrix = normalize_rows(rm.raw_relevance);
  rm.expertise = compute_expertise(corpus);
  rm.roster = corpus.roster;
  rm.k = model.k();
  check_relation(rm);
  return rm;
}

void check_relation(const RelationMatrix& rm) {
  const int r_count = rm.collaborator_count();
  if (rm.matrix.rows() != r_count || rm.raw_relevance.rows() != r_count ||
      rm.expertise.size() != r_count)
    throw InternalError("relation: row counts disagree with roster size");
  if (rm.matrix.cols() != rm.k || rm.raw_relevance.cols() != rm.k)
    throw InternalError("relation: column counts disagree with k");
  for (Eigen::Index i = 0; i < rm.matrix.rows(); ++i) {
    if (std::abs(rm.matrix.row(i).sum() - 1.0) > 1e-9)
      throw InternalError("relation: matrix row " + std::to_string(i) +
                          " is not normalized");
  }
  if ((rm.raw_relevance.array() < 0.0).any() ||
      (rm.raw_relevance.array() > 1.0 + 1e-12).any())
    throw InternalError("relation: raw relevance outside [0, 1]");
  if ((rm.expertise.array() < 0.0).any())
    throw InternalError("relation: negative expertise");
  if (std::abs(rm.expertise.sum() - 1.0) > 1e-9)
    throw InternalError("relation: expertise does not sum to one");
}

}  // namespace tima
