#include "tima/eval.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <ostream>

#include "tima/corpus.hpp"
#include "tima/inference.hpp"
#include "tima/io_util.hpp"
#include "tima/relation.hpp"

namespace tima {

using nlohmann::json;

std::pair<double, double> precision_recall(const std::set<std::string>& core_reviewers,
                                           const std::set<std::string>& match_set) {
  if (match_set.empty())
    throw DataError("precision undefined for an empty match set");
  if (core_reviewers.empty())
    throw DataError("PR without core reviewers must be excluded upstream");
  std::size_t hits = 0;
  for (const auto& m : match_set) hits += core_reviewers.contains(m);
  return {static_cast<double>(hits) / static_cast<double>(match_set.size()),
          static_cast<double>(hits) / static_cast<double>(core_reviewers.size())};
}

std::pair<std::vector<PullRequest>, std::vector<PullRequest>> chronological_split(
    std::vector<PullRequest> prs, double test_fraction) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw UsageError("test fraction must be in (0, 1)");
  if (prs.size() < 2) throw DataError("need at least 2 PRs to split");
  std::stable_sort(prs.begin(), prs.end(),
                   [](const PullRequest& a, const PullRequest& b) {
                     if (a.closed_at != b.closed_at)
                       return a.closed_at < b.closed_at;
                     return a.id < b.id;
                   });
  const auto n = prs.size();
  const auto test_n = static_cast<std::size_t>(
      std::ceil(static_cast<double>(n) * test_fraction));
  if (test_n == 0 || test_n >= n)
    throw DataError("test fraction " + format_double(test_fraction) +
                    " leaves an empty train or test set for " +
                    std::to_string(n) + " PRs");
  std::vector<PullRequest> test(prs.end() - static_cast<std::ptrdiff_t>(test_n),
                                prs.end());
  prs.resize(n - test_n);
  return {std::move(prs), std::move(test)};
}

EvalReport run_evaluation(const std::vector<PullRequest>& prs, const LdaConfig& cfg,
                          double test_fraction, const EvalOptions& opts) {
  auto [train_prs, test_prs] = chronological_split(prs, test_fraction);

  EvalReport report;
  report.k = cfg.k;
  report.train_count = static_cast<int>(train_prs.size());
  report.test_count = static_cast<int>(test_prs.size());
  report.split_spec = "chronological test_fraction=" + format_double(test_fraction) +
                      " train=" + std::to_string(train_prs.size()) +
                      " test=" + std::to_string(test_prs.size());

  Corpus corpus = build_corpus(train_prs, opts.prep);
  LdaModel model = train(corpus, cfg);
  RelationMatrix rm = build_relation(model, corpus);
  const std::set<std::string> roster(corpus.roster.begin(), corpus.roster.end());

  double precision_sum = 0.0;
  double recall_sum = 0.0;
  for (const auto& pr : test_prs) {
    if (pr.reviewers.empty()) {
      report.empty_core.push_back(pr.id);
      continue;
    }
    TopicDistribution dist;
    try {
      dist = fold_in(pr, model, corpus.vocab, opts.prep);
    } catch (const DataError&) {
      report.no_signal.push_back(pr.id);
      continue;
    }
    MatchResult mr = match(dist, rm, opts.tie_tolerance);
    auto [precision, recall] = precision_recall(pr.reviewers, mr.candidates);
    bool reachable = std::any_of(pr.reviewers.begin(), pr.reviewers.end(),
                                 [&](const std::string& r) { return roster.contains(r); });
    if (!reachable) ++report.unreachable_core_count;
    precision_sum += precision;
    recall_sum += recall;
    report.per_pr.push_back(PrMetrics{pr.id, precision, recall, pr.reviewers,
                                      std::move(mr.candidates)});
  }
  if (!report.per_pr.empty()) {
    report.mean_precision = precision_sum / static_cast<double>(report.per_pr.size());
    report.mean_recall = recall_sum / static_cast<double>(report.per_pr.size());
  }
  return report;
}

DivergenceStudy divergence_study(const std::vector<PullRequest>& prs,
                                 const LdaConfig& cfg, double test_fraction,
                                 const EvalOptions& opts) {
  auto [train_prs, test_prs] = chronological_split(prs, test_fraction);
  Corpus corpus = build_corpus(train_prs, opts.prep);

  DivergenceStudy study;
  std::vector<PullRequest> usable;
  for (const auto& pr : test_prs) {
    if (preprocess(concatenated_text(pr), opts.prep).empty())
      study.skipped.push_back(pr.id);
    else
      usable.push_back(pr);
  }
  if (usable.empty())
    throw DataError("no test PR has any token after preprocessing");

  RetrainResult retrained = retrain_with(usable, corpus, cfg, opts.prep);
  double sum = 0.0;
  for (std::size_t i = 0; i < usable.size(); ++i) {
    TopicDistribution folded =
        fold_in(usable[i], retrained.model, retrained.vocab, opts.prep);
    const double d = js_divergence(folded.probs, retrained.distributions[i].probs);
    study.per_doc.emplace_back(usable[i].id, d);
    sum += d;
  }
  study.mean = sum / static_cast<double>(study.per_doc.size());
  return study;
}

void print_report_table(const EvalReport& report, std::ostream& out) {
  out << "k=" << report.k << "  " << report.split_spec << "\n";
  out << "scored=" << report.per_pr.size()
      << " no_signal=" << report.no_signal.size()
      << " empty_core=" << report.empty_core.size()
      << " unreachable_core=" << report.unreachable_core_count << "\n";
  out << "mean_precision=" << format_double(report.mean_precision)
      << " mean_recall=" << format_double(report.mean_recall) << "\n";
  out << "pr_id\tprecision\trecall\tcandidates\n";
  for (const auto& m : report.per_pr) {
    out << m.pr_id << '\t' << format_double(m.precision) << '\t'
        << format_double(m.recall) << '\t';
    bool first = true;
    for (const auto& c : m.candidates) {
      if (!first) out << ' ';
      out << c;
      first = false;
    }
    out << '\n';
  }
}

void write_report_json(const EvalReport& report, std::ostream& out) {
  json j;
  j["k"] = report.k;
  j["split"] = report.split_spec;
  j["train_count"] = report.train_count;
  j["test_count"] = report.test_count;
  j["mean_precision"] = report.mean_precision;
  j["mean_recall"] = report.mean_recall;
  j["averaging"] = "macro over scored test PRs";
  j["no_signal"] = report.no_signal;
  j["empty_core"] = report.empty_core;
  j["unreachable_core_count"] = report.unreachable_core_count;
  j["per_pr"] = json::array();
  for (const auto& m : report.per_pr) {
    json e;
    e["id"] = m.pr_id;
    e["precision"] = m.precision;
    e["recall"] = m.recall;
    e["core_reviewers"] = std::vector<std::string>(m.core_reviewers.begin(),
                                                   m.core_reviewers.end());
    e["candidates"] = std::vector<std::string>(m.candidates.begin(),
                                               m.candidates.end());
    j["per_pr"].push_back(std::move(e));
  }
  out << j.dump(2) << '\n';
}

void write_sweep_csv(const std::vector<EvalReport>& reports, std::ostream& out) {
  out << "k,mean_precision,mean_recall\n";
  for (const auto& r : reports)
    out << r.k << ',' << format_double(r.mean_precision) << ','
        << format_double(r.mean_recall) << '\n';
}

}  // namespace tima
