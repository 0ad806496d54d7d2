#include "tima/matcher.hpp"

#include "tima/errors.hpp"

namespace tima {

MatchResult match(const TopicDistribution& dist, const RelationMatrix& rm,
                  double tie_tolerance) {
  if (dist.probs.size() != rm.k)
    throw DataError("topic distribution has " + std::to_string(dist.probs.size()) +
                    " entries but the relation matrix has " + std::to_string(rm.k) +
                    " topics");
  if (tie_tolerance < 0.0 || tie_tolerance >= 1.0)
    throw UsageError("tie tolerance must be in [0, 1)");
  if (rm.collaborator_count() == 0)
    throw DataError("relation matrix has no collaborators");

  MatchResult result;
  result.pr_id = dist.pr_id;
  result.tie_tolerance = tie_tolerance;
  result.scores = rm.matrix.array().colwise() * rm.expertise.array();

  const double top = dist.probs.maxCoeff();
  for (int k = 0; k < rm.k; ++k)
    if (dist.probs(k) >= (1.0 - tie_tolerance) * top)
      result.top_topics.push_back(k);

  for (int k : result.top_topics) {
    const double best = result.scores.col(k).maxCoeff();
    for (int r = 0; r < rm.collaborator_count(); ++r)
      if (result.scores(r, k) >= (1.0 - tie_tolerance) * best)
        result.candidates.insert(rm.roster[static_cast<std::size_t>(r)]);
  }
  if (result.candidates.empty())
    throw InternalError("match produced no candidates");
  return result;
}

std::vector<MatchResult> match_batch(const std::vector<TopicDistribution>& dists,
                                     const RelationMatrix& rm,
                                     double tie_tolerance) {
  std::vector<MatchResult> results;
  results.reserve(dists.size());
  for (const auto& dist : dists) results.push_back(match(dist, rm, tie_tolerance));
  return results;
}

}  // namespace tima
