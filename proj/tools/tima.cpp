// Command-line frontend for the integrator-matching pipeline:
//   ingest        JSONL or GitHub -> corpus directory
//   train         corpus directory -> model directory (LDA + relation matrix)
//   match         model directory + new PR(s) -> candidate integrators
//   eval          JSONL -> precision/recall report, optional K sweep
//   export-matrix model directory -> collaborator x topic CSV

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tima/corpus.hpp"
#include "tima/errors.hpp"
#include "tima/eval.hpp"
#include "tima/github.hpp"
#include "tima/inference.hpp"
#include "tima/io_util.hpp"
#include "tima/lda.hpp"
#include "tima/matcher.hpp"
#include "tima/model_store.hpp"
#include "tima/pull_request.hpp"
#include "tima/relation.hpp"
#include "tima/text_prep.hpp"

namespace {

using namespace tima;

struct IngestArgs {
  std::string input;
  std::string github;
  std::string out_dir;
  std::string stopword_file;
  std::string dump_jsonl;
  int min_token_len = 2;
  bool keep_numeric = false;
};

struct TrainArgs {
  std::string corpus_dir;
  std::string out_dir;
  int k = 15;
  double alpha = 0.0;  // 0 = default 50/k
  double beta = 0.1;
  int iterations = 1000;
  std::uint64_t seed = 1;
};

struct MatchArgs {
  std::string model_dir;
  std::string pr_file;
  std::string batch_file;
  double tie_tolerance = kDefaultTieTolerance;
  int top_n = 0;  // 0 = all collaborators in the ranked table
};

struct EvalArgs {
  std::string input;
  std::string sweep;
  std::string out_csv;
  std::string report_json;
  int k = 15;
  double alpha = 0.0;
  double beta = 0.1;
  int iterations = 1000;
  std::uint64_t seed = 1;
  double test_fraction = 0.1;
  double tie_tolerance = kDefaultTieTolerance;
  std::string stopword_file;
  bool divergence = false;
};

struct ExportArgs {
  std::string model_dir;
  std::string out_csv;
  bool raw = false;
  bool normalized = false;
};

PrepConfig make_prep(const std::string& stopword_file, int min_token_len,
                     bool keep_numeric) {
  PrepConfig prep = default_prep_config();
  if (!stopword_file.empty()) prep.stopwords = load_stopword_file(stopword_file);
  prep.min_token_len = min_token_len;
  prep.drop_numeric = !keep_numeric;
  validate(prep);
  return prep;
}

int cmd_ingest(const IngestArgs& args) {
  std::vector<PullRequest> prs;
  if (!args.github.empty()) {
    const char* token = std::getenv("TIMA_GITHUB_TOKEN");
    if (token == nullptr || *token == '\0')
      throw UsageError("--github requires the TIMA_GITHUB_TOKEN environment variable");
    GithubOptions opts;
    opts.token = token;
    if (const char* base = std::getenv("TIMA_GITHUB_API"); base && *base)
      opts.api_base = base;
    prs = fetch_github(args.github, opts);
    std::cout << "fetched " << prs.size() << " closed PRs from " << args.github
              << "\n";
  } else {
    prs = ingest_jsonl(args.input);
  }
  if (!args.dump_jsonl.empty()) write_jsonl(prs, args.dump_jsonl);

  PrepConfig prep = make_prep(args.stopword_file, args.min_token_len, args.keep_numeric);
  CorpusBuildReport report;
  Corpus corpus = build_corpus(prs, prep, &report);
  save_corpus(corpus, prep, args.out_dir, &report);

  std::cout << "prs=" << report.input_prs
            << " documents=" << corpus.doc_count()
            << " skipped_no_reviewer=" << report.skipped_no_reviewer.size()
            << " dropped_empty=" << report.dropped_empty.size()
            << " collaborators=" << corpus.roster.size()
            << " vocabulary=" << corpus.vocab.size() << "\n";
  std::cout << "corpus written to " << args.out_dir << "\n";
  return 0;
}

int cmd_train(const TrainArgs& args) {
  LoadedCorpus loaded = load_corpus(args.corpus_dir);
  LdaConfig cfg = LdaConfig::defaults(args.k);
  if (args.alpha > 0.0) cfg.alpha = args.alpha;
  cfg.beta = args.beta;
  cfg.iterations = args.iterations;
  cfg.seed = args.seed;
  validate(cfg);

  GibbsSampler sampler(loaded.corpus, cfg);
  const int trace_every = std::max(1, cfg.iterations / 10);
  for (int it = 1; it <= cfg.iterations; ++it) {
    sampler.sweep();
    if (it == 1 || it % trace_every == 0 || it == cfg.iterations) {
      LdaModel snapshot = sampler.model();
      std::cout << "sweep " << it << "/" << cfg.iterations << " log-likelihood "
                << format_double(log_likelihood(snapshot, loaded.corpus)) << "\n";
    }
  }
  LdaModel model = sampler.model();
  check_model(model);

  ModelBundle bundle;
  bundle.model = std::move(model);
  bundle.vocab = loaded.corpus.vocab;
  bundle.prep = loaded.prep;
  bundle.relation = build_relation(bundle.model, loaded.corpus);
  save_model_bundle(bundle, args.out_dir);
  std::cout << "model written to " << args.out_dir << " (k=" << cfg.k
            << " docs=" << bundle.model.doc_count()
            << " vocab=" << bundle.model.vocab_size() << ")\n";
  return 0;
}

void print_match(const MatchResult& mr, const RelationMatrix& rm, int top_n,
                 std::ostream& out) {
  out << "pr " << mr.pr_id << ": status=ok top_topics=";
  for (std::size_t i = 0; i < mr.top_topics.size(); ++i)
    out << (i ? "," : "") << mr.top_topics[static_cast<std::size_t>(i)];
  out << " candidates=";
  bool first = true;
  for (const auto& c : mr.candidates) {
    out << (first ? "" : ",") << c;
    first = false;
  }
  out << "\n";
  for (int k : mr.top_topics) {
    std::vector<int> order(static_cast<std::size_t>(rm.collaborator_count()));
    for (int r = 0; r < rm.collaborator_count(); ++r)
      order[static_cast<std::size_t>(r)] = r;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return mr.scores(a, k) > mr.scores(b, k);
    });
    int shown = top_n > 0 ? std::min<int>(top_n, rm.collaborator_count())
                          : rm.collaborator_count();
    out << "  topic " << k << ":";
    for (int i = 0; i < shown; ++i) {
      int r = order[static_cast<std::size_t>(i)];
      out << ' ' << rm.roster[static_cast<std::size_t>(r)] << '='
          << format_double(mr.scores(r, k));
    }
    out << "\n";
  }
}

int cmd_match(const MatchArgs& args) {
  ModelBundle bundle = load_model_bundle(args.model_dir);
  std::vector<PullRequest> prs;
  if (!args.pr_file.empty()) {
    prs.push_back(parse_pr_json(read_file(args.pr_file), args.pr_file));
  } else {
    prs = ingest_jsonl(args.batch_file);
  }
  for (const auto& pr : prs) {
    try {
      TopicDistribution dist = fold_in(pr, bundle.model, bundle.vocab, bundle.prep);
      MatchResult mr = match(dist, bundle.relation, args.tie_tolerance);
      print_match(mr, bundle.relation, args.top_n, std::cout);
    } catch (const DataError& e) {
      std::cout << "pr " << pr.id << ": status=no-signal (" << e.what() << ")\n";
    }
  }
  return 0;
}

std::vector<int> parse_sweep(const std::string& sweep) {
  std::vector<int> ks;
  for (const auto& part : split(sweep, ',')) {
    try {
      ks.push_back(std::stoi(part));
    } catch (...) {
      throw UsageError("bad --sweep entry: '" + part + "'");
    }
  }
  if (ks.empty()) throw UsageError("--sweep must list at least one k");
  return ks;
}

int cmd_eval(const EvalArgs& args) {
  std::vector<PullRequest> prs = ingest_jsonl(args.input);
  EvalOptions opts;
  opts.prep = make_prep(args.stopword_file, 2, false);
  opts.tie_tolerance = args.tie_tolerance;

  std::vector<int> ks =
      args.sweep.empty() ? std::vector<int>{args.k} : parse_sweep(args.sweep);
  std::vector<EvalReport> reports;
  for (int k : ks) {
    LdaConfig cfg = LdaConfig::defaults(k);
    if (args.alpha > 0.0) cfg.alpha = args.alpha;
    cfg.beta = args.beta;
    cfg.iterations = args.iterations;
    cfg.seed = args.seed;
    validate(cfg);
    EvalReport report = run_evaluation(prs, cfg, args.test_fraction, opts);
    print_report_table(report, std::cout);
    std::cout << "\n";
    reports.push_back(std::move(report));
  }

  std::ostringstream csv;
  write_sweep_csv(reports, csv);
  std::cout << csv.str();
  if (!args.out_csv.empty()) write_file(args.out_csv, csv.str());

  if (!args.report_json.empty()) {
    std::ofstream out(args.report_json);
    if (!out) throw DataError("cannot write file: " + args.report_json);
    for (const auto& r : reports) write_report_json(r, out);
  }

  if (args.divergence) {
    LdaConfig cfg = LdaConfig::defaults(ks.front());
    if (args.alpha > 0.0) cfg.alpha = args.alpha;
    cfg.beta = args.beta;
    cfg.iterations = args.iterations;
    cfg.seed = args.seed;
    DivergenceStudy study = divergence_study(prs, cfg, args.test_fraction, opts);
    std::cout << "divergence mean=" << format_double(study.mean) << " docs="
              << study.per_doc.size() << " skipped=" << study.skipped.size()
              << "\n";
    for (const auto& [id, d] : study.per_doc)
      std::cout << "  " << id << " " << format_double(d) << "\n";
  }
  return 0;
}

int cmd_export(const ExportArgs& args) {
  if (args.raw == args.normalized)
    throw UsageError("pass exactly one of --raw or --normalized");
  ModelBundle bundle = load_model_bundle(args.model_dir);
  std::ofstream out(args.out_csv, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + args.out_csv);
  write_relation_csv(bundle.relation, args.raw, out);
  std::cout << "wrote " << bundle.relation.collaborator_count() << " rows to "
            << args.out_csv << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topic-based integrator matching for pull requests"};
  app.require_subcommand(1);

  IngestArgs ingest_args;
  auto* ingest = app.add_subcommand("ingest", "Build a corpus directory from PRs");
  auto* in_opt = ingest->add_option("--input", ingest_args.input, "PR JSONL file");
  auto* gh_opt = ingest->add_option("--github", ingest_args.github,
                                    "owner/name repository to fetch");
  ingest->add_option("--out", ingest_args.out_dir, "corpus directory")->required();
  ingest->add_option("--stopwords", ingest_args.stopword_file,
                     "stopword list file (one word per line)");
  ingest->add_option("--min-token-len", ingest_args.min_token_len,
                     "minimum token length (default 2)");
  ingest->add_flag("--keep-numeric", ingest_args.keep_numeric,
                   "keep purely numeric tokens");
  ingest->add_option("--dump-jsonl", ingest_args.dump_jsonl,
                     "also write the raw PRs to this JSONL file");
  in_opt->excludes(gh_opt);

  TrainArgs train_args;
  auto* train = app.add_subcommand("train", "Train LDA and the relation matrix");
  train->add_option("--corpus", train_args.corpus_dir, "corpus directory")->required();
  train->add_option("--out", train_args.out_dir, "model directory")->required();
  train->add_option("--k", train_args.k, "number of topics (default 15)");
  train->add_option("--alpha", train_args.alpha, "doc-topic prior (default 50/k)");
  train->add_option("--beta", train_args.beta, "topic-word prior (default 0.1)");
  train->add_option("--iters", train_args.iterations, "Gibbs sweeps (default 1000)");
  train->add_option("--seed", train_args.seed, "RNG seed (default 1)");

  MatchArgs match_args;
  auto* match_cmd = app.add_subcommand("match", "Match new PRs to integrators");
  match_cmd->add_option("--model", match_args.model_dir, "model directory")->required();
  auto* pr_opt = match_cmd->add_option("--pr", match_args.pr_file, "single PR JSON file");
  auto* batch_opt =
      match_cmd->add_option("--batch", match_args.batch_file, "PR JSONL file");
  match_cmd->add_option("--tie-tolerance", match_args.tie_tolerance,
                        "relative tie tolerance (default 1e-9)");
  match_cmd->add_option("--top-n", match_args.top_n,
                        "rows of the ranked table to print (default all)");
  pr_opt->excludes(batch_opt);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate matching on held-out PRs");
  eval_cmd->add_option("--input", eval_args.input, "PR JSONL file")->required();
  eval_cmd->add_option("--k", eval_args.k, "number of topics (default 15)");
  eval_cmd->add_option("--sweep", eval_args.sweep, "comma-separated list of k values");
  eval_cmd->add_option("--alpha", eval_args.alpha, "doc-topic prior (default 50/k)");
  eval_cmd->add_option("--beta", eval_args.beta, "topic-word prior (default 0.1)");
  eval_cmd->add_option("--iters", eval_args.iterations, "Gibbs sweeps (default 1000)");
  eval_cmd->add_option("--seed", eval_args.seed, "RNG seed (default 1)");
  eval_cmd->add_option("--test-fraction", eval_args.test_fraction,
                       "held-out fraction (default 0.1)");
  eval_cmd->add_option("--tie-tolerance", eval_args.tie_tolerance,
                       "relative tie tolerance (default 1e-9)");
  eval_cmd->add_option("--stopwords", eval_args.stopword_file, "stopword list file");
  eval_cmd->add_option("--out-csv", eval_args.out_csv, "write the sweep CSV here");
  eval_cmd->add_option("--report-json", eval_args.report_json,
                       "write per-PR reports here");
  eval_cmd->add_flag("--divergence", eval_args.divergence,
                     "also compare fold-in against retraining");

  ExportArgs export_args;
  auto* export_cmd =
      app.add_subcommand("export-matrix", "Export the relation matrix as CSV");
  export_cmd->add_option("--model", export_args.model_dir, "model directory")->required();
  export_cmd->add_option("--out", export_args.out_csv, "output CSV path")->required();
  export_cmd->add_flag("--raw", export_args.raw, "export unnormalized relevance");
  export_cmd->add_flag("--normalized", export_args.normalized,
                       "export the row-normalized matrix");

  try {
    app.parse(argc, argv);
    if (ingest->parsed()) {
      if (ingest_args.input.empty() == ingest_args.github.empty())
        throw UsageError("pass exactly one of --input or --github");
      return cmd_ingest(ingest_args);
    }
    if (train->parsed()) return cmd_train(train_args);
    if (match_cmd->parsed()) {
      if (match_args.pr_file.empty() == match_args.batch_file.empty())
        throw UsageError("pass exactly one of --pr or --batch");
      return cmd_match(match_args);
    }
    if (eval_cmd->parsed()) return cmd_eval(eval_args);
    if (export_cmd->parsed()) return cmd_export(export_args);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
