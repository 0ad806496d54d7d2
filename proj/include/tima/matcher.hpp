#pragma once

#include <Eigen/Core>
#include <set>
#include <string>
#include <vector>

#include "tima/inference.hpp"
#include "tima/relation.hpp"

namespace tima {

/// Exact argmax ties are fragile in floating point; anything within this
/// relative distance of the maximum counts as tied.
inline constexpr double kDefaultTieTolerance = 1e-9;

/// Candidate integrators for one PR.
///
/// `scores` keeps the full table s(r, k) = matrix(r, k) * expertise(r) so
/// callers can print rankings; `candidates` holds only the per-top-topic
/// winners, which is what the matching metrics use.
struct MatchResult {
  std::string pr_id;
  std::vector<int> top_topics;  // ascending topic indices at the max
  Eigen::MatrixXd scores;       // R x K
  std::set<std::string> candidates;
  double tie_tolerance = kDefaultTieTolerance;
};

/// Picks the topics tied for the distribution maximum, scores every
/// collaborator on each of them, and returns the union of the per-topic
/// score winners (all of them, when tied).
MatchResult match(const TopicDistribution& dist, const RelationMatrix& rm,
                  double tie_tolerance = kDefaultTieTolerance);

/// Element-wise match over a batch, preserving order.
std::vector<MatchResult> match_batch(const std::vector<TopicDistribution>& dists,
                                     const RelationMatrix& rm,
                                     double tie_tolerance = kDefaultTieTolerance);

}  // namespace tima
