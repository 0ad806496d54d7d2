#pragma once

#include <iosfwd>
#include <string>

#include "tima/corpus.hpp"
#include "tima/lda.hpp"
#include "tima/relation.hpp"
#include "tima/text_prep.hpp"

namespace tima {

/// Everything a model directory holds: enough to match new PRs without the
/// corpus it was trained from.
struct ModelBundle {
  LdaModel model;
  Vocabulary vocab;
  PrepConfig prep;
  RelationMatrix relation;
};

/// Layout: lda.json (config, seed, hashes, prep settings, roster),
/// theta.csv (D x K), phi.csv (K x V), vocab.txt, relation.csv,
/// relevance_raw.csv, expertise.csv. All numbers are plain decimal text.
void save_model_bundle(const ModelBundle& bundle, const std::string& dir);
ModelBundle load_model_bundle(const std::string& dir);

/// Collaborator-by-topic CSV with a topic-index header row, suitable for
/// external heatmap rendering.
void write_relation_csv(const RelationMatrix& rm, bool raw, std::ostream& out);

}  // namespace tima
