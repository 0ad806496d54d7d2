#include "tima/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "tima/errors.hpp"
#include "tima/io_util.hpp"

namespace tima {

namespace fs = std::filesystem;
using nlohmann::json;

int Vocabulary::add(const std::string& word) {
  auto [it, inserted] = index_.try_emplace(word, static_cast<int>(words_.size()));
  if (inserted) words_.push_back(word);
  return it->second;
}

std::optional<int> Vocabulary::find(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& Vocabulary::word(int id) const {
  if (id < 0 || id >= size())
    throw InternalError("vocabulary id out of range: " + std::to_string(id));
  return words_[static_cast<std::size_t>(id)];
}

std::uint64_t Vocabulary::hash() const {
  std::string joined;
  for (const auto& w : words_) {
    joined += w;
    joined += '\n';
  }
  return fnv1a(joined);
}

std::int64_t Corpus::total_tokens() const {
  std::int64_t n = 0;
  for (const auto& d : documents) n += d.n_words();
  return n;
}

Eigen::VectorXd Corpus::doc_lengths() const {
  Eigen::VectorXd n(doc_count());
  for (int d = 0; d < doc_count(); ++d)
    n(d) = static_cast<double>(documents[static_cast<std::size_t>(d)].n_words());
  return n;
}

Corpus build_corpus(const std::vector<PullRequest>& prs, const PrepConfig& prep,
                    CorpusBuildReport* report) {
  validate(prep);
  CorpusBuildReport local;
  CorpusBuildReport& rep = report ? *report : local;
  rep.input_prs = static_cast<int>(prs.size());

  Corpus corpus;
  std::vector<const PullRequest*> kept;
  for (const auto& pr : prs) {
    if (pr.reviewers.empty()) {
      rep.skipped_no_reviewer.push_back(pr.id);
      continue;
    }
    std::vector<std::string> stems = preprocess(concatenated_text(pr), prep);
    if (stems.empty()) {
      rep.dropped_empty.push_back(pr.id);
      continue;
    }
    Document doc;
    doc.pr_id = pr.id;
    doc.tokens.reserve(stems.size());
    for (const auto& s : stems) doc.tokens.push_back(corpus.vocab.add(s));
    corpus.documents.push_back(std::move(doc));
    kept.push_back(&pr);
  }
  if (corpus.documents.empty())
    throw DataError(
        "unusable corpus: no PR has both a reviewer and surviving text");

  std::set<std::string> reviewer_union;
  for (const PullRequest* pr : kept)
    reviewer_union.insert(pr->reviewers.begin(), pr->reviewers.end());
  corpus.roster.assign(reviewer_union.begin(), reviewer_union.end());

  std::unordered_map<std::string, int> roster_index;
  for (int i = 0; i < static_cast<int>(corpus.roster.size()); ++i)
    roster_index[corpus.roster[static_cast<std::size_t>(i)]] = i;

  corpus.review_labels.reserve(kept.size());
  for (const PullRequest* pr : kept) {
    std::vector<int> labels;
    labels.reserve(pr->reviewers.size());
    for (const auto& r : pr->reviewers) labels.push_back(roster_index.at(r));
    std::sort(labels.begin(), labels.end());
    corpus.review_labels.push_back(std::move(labels));
  }
  check_corpus(corpus);
  return corpus;
}

void check_corpus(const Corpus& corpus) {
  if (corpus.documents.size() != corpus.review_labels.size())
    throw InternalError("corpus: documents and labels disagree in length");
  for (const auto& doc : corpus.documents) {
    if (doc.tokens.empty())
      throw InternalError("corpus: empty document " + doc.pr_id);
    for (int t : doc.tokens)
      if (t < 0 || t >= corpus.vocab.size())
        throw InternalError("corpus: token id out of range in " + doc.pr_id);
  }
  int roster_size = static_cast<int>(corpus.roster.size());
  for (const auto& labels : corpus.review_labels) {
    if (labels.empty())
      throw InternalError("corpus: training document without reviewer label");
    for (int r : labels)
      if (r < 0 || r >= roster_size)
        throw InternalError("corpus: reviewer index out of range");
  }
  if (!std::is_sorted(corpus.roster.begin(), corpus.roster.end()))
    throw InternalError("corpus: roster is not sorted");
}

namespace {

std::vector<std::vector<int>> read_int_rows(const std::string& path,
                                            bool allow_empty_rows) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  std::vector<std::vector<int>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<int> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && line[pos] == ' ') ++pos;
      if (pos >= line.size()) break;
      std::size_t end = line.find(' ', pos);
      if (end == std::string::npos) end = line.size();
      int v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, v);
      if (ec != std::errc{} || ptr != line.data() + end)
        throw DataError(path + ":" + std::to_string(line_no) + ": bad integer");
      row.push_back(v);
      pos = end;
    }
    if (row.empty() && !allow_empty_rows)
      throw DataError(path + ":" + std::to_string(line_no) + ": empty row");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void save_corpus(const Corpus& corpus, const PrepConfig& prep,
                 const std::string& dir, const CorpusBuildReport* report) {
  check_corpus(corpus);
  fs::create_directories(dir);

  std::string vocab_txt;
  for (const auto& w : corpus.vocab.words()) {
    vocab_txt += w;
    vocab_txt += '\n';
  }
  write_file(dir + "/vocab.txt", vocab_txt);

  std::string docs_txt;
  for (const auto& doc : corpus.documents) {
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
      if (i > 0) docs_txt += ' ';
      docs_txt += std::to_string(doc.tokens[i]);
    }
    docs_txt += '\n';
  }
  write_file(dir + "/docs.txt", docs_txt);

  std::string labels_txt;
  for (const auto& labels : corpus.review_labels) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i > 0) labels_txt += ' ';
      labels_txt += std::to_string(labels[i]);
    }
    labels_txt += '\n';
  }
  write_file(dir + "/labels.txt", labels_txt);

  json meta;
  meta["format"] = "tima-corpus";
  meta["version"] = 1;
  meta["roster"] = corpus.roster;
  std::vector<std::string> pr_ids;
  for (const auto& doc : corpus.documents) pr_ids.push_back(doc.pr_id);
  meta["doc_pr_ids"] = pr_ids;
  meta["prep"]["min_token_len"] = prep.min_token_len;
  meta["prep"]["drop_numeric"] = prep.drop_numeric;
  std::vector<std::string> stopwords(prep.stopwords.begin(), prep.stopwords.end());
  std::sort(stopwords.begin(), stopwords.end());
  meta["prep"]["stopwords"] = stopwords;
  meta["stopword_hash"] = hash_hex(stopword_hash(prep.stopwords));
  meta["vocab_hash"] = hash_hex(corpus.vocab.hash());
  if (report) {
    meta["build"]["input_prs"] = report->input_prs;
    meta["build"]["skipped_no_reviewer"] = report->skipped_no_reviewer;
    meta["build"]["dropped_empty"] = report->dropped_empty;
  }
  write_file(dir + "/meta.json", meta.dump(2) + "\n");
}

LoadedCorpus load_corpus(const std::string& dir) {
  json meta = json::parse(read_file(dir + "/meta.json"), nullptr, false);
  if (meta.is_discarded()) throw DataError(dir + "/meta.json: malformed JSON");
  if (meta.value("format", "") != "tima-corpus")
    throw DataError(dir + "/meta.json: not a corpus directory");

  LoadedCorpus out;
  out.prep.min_token_len = meta.at("prep").at("min_token_len").get<int>();
  out.prep.drop_numeric = meta.at("prep").at("drop_numeric").get<bool>();
  for (const auto& w : meta.at("prep").at("stopwords"))
    out.prep.stopwords.insert(w.get<std::string>());
  validate(out.prep);

  Corpus& corpus = out.corpus;
  corpus.roster = meta.at("roster").get<std::vector<std::string>>();
  std::vector<std::string> pr_ids =
      meta.at("doc_pr_ids").get<std::vector<std::string>>();

  std::ifstream vocab_in(dir + "/vocab.txt");
  if (!vocab_in) throw DataError("cannot open file: " + dir + "/vocab.txt");
  std::string word;
  while (std::getline(vocab_in, word)) {
    if (!word.empty() && word.back() == '\r') word.pop_back();
    if (word.empty()) throw DataError(dir + "/vocab.txt: empty word line");
    corpus.vocab.add(word);
  }

  std::vector<std::vector<int>> docs = read_int_rows(dir + "/docs.txt", false);
  if (docs.size() != pr_ids.size())
    throw DataError(dir + ": docs.txt and meta.json disagree on document count");
  for (std::size_t i = 0; i < docs.size(); ++i)
    corpus.documents.push_back(Document{pr_ids[i], std::move(docs[i])});

  corpus.review_labels = read_int_rows(dir + "/labels.txt", false);
  if (corpus.review_labels.size() != corpus.documents.size())
    throw DataError(dir + ": labels.txt and docs.txt disagree on row count");

  std::string expect_hash = meta.value("vocab_hash", "");
  if (!expect_hash.empty() && expect_hash != hash_hex(corpus.vocab.hash()))
    throw DataError(dir + ": vocab.txt does not match recorded vocab_hash");

  check_corpus(corpus);
  return out;
}

}  // namespace tima
