#include "tima/model_store.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "tima/errors.hpp"
#include "tima/io_util.hpp"

namespace tima {

namespace fs = std::filesystem;
using nlohmann::json;

void write_relation_csv(const RelationMatrix& rm, bool raw, std::ostream& out) {
  const Eigen::MatrixXd& m = raw ? rm.raw_relevance : rm.matrix;
  out << "collaborator";
  for (int k = 0; k < rm.k; ++k) out << ",topic_" << k;
  out << '\n';
  for (int r = 0; r < rm.collaborator_count(); ++r) {
    out << rm.roster[static_cast<std::size_t>(r)];
    for (int k = 0; k < rm.k; ++k) out << ',' << format_double(m(r, k));
    out << '\n';
  }
}

namespace {

Eigen::MatrixXd load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  return read_matrix_csv(in, path);
}

// Reads back a relation CSV written by write_relation_csv.
std::pair<std::vector<std::string>, Eigen::MatrixXd> load_relation_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  std::string header;
  if (!std::getline(in, header) || header.rfind("collaborator", 0) != 0)
    throw DataError(path + ": missing relation header");
  const int k = static_cast<int>(split(header, ',').size()) - 1;
  std::vector<std::string> roster;
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells = split(line, ',');
    if (static_cast<int>(cells.size()) != k + 1)
      throw DataError(path + ": ragged relation row");
    roster.push_back(cells[0]);
    std::vector<double> row;
    for (int i = 1; i <= k; ++i) row.push_back(std::stod(cells[static_cast<std::size_t>(i)]));
    rows.push_back(std::move(row));
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), k);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (int c = 0; c < k; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return {std::move(roster), std::move(m)};
}

}  // namespace

void save_model_bundle(const ModelBundle& bundle, const std::string& dir) {
  check_model(bundle.model);
  check_relation(bundle.relation);
  if (bundle.model.vocab_hash != bundle.vocab.hash())
    throw InternalError("model bundle: vocabulary does not match model hash");
  fs::create_directories(dir);

  json meta;
  meta["format"] = "tima-model";
  meta["version"] = 1;
  meta["k"] = bundle.model.config.k;
  meta["alpha"] = bundle.model.config.alpha;
  meta["beta"] = bundle.model.config.beta;
  meta["iterations"] = bundle.model.config.iterations;
  meta["seed"] = bundle.model.config.seed;
  meta["vocab_hash"] = hash_hex(bundle.model.vocab_hash);
  meta["stopword_hash"] = hash_hex(stopword_hash(bundle.prep.stopwords));
  meta["doc_count"] = bundle.model.doc_count();
  meta["vocab_size"] = bundle.model.vocab_size();
  meta["roster"] = bundle.relation.roster;
  meta["prep"]["min_token_len"] = bundle.prep.min_token_len;
  meta["prep"]["drop_numeric"] = bundle.prep.drop_numeric;
  std::vector<std::string> stopwords(bundle.prep.stopwords.begin(),
                                     bundle.prep.stopwords.end());
  std::sort(stopwords.begin(), stopwords.end());
  meta["prep"]["stopwords"] = stopwords;
  write_file(dir + "/lda.json", meta.dump(2) + "\n");

  std::ostringstream theta;
  write_matrix_csv(theta, bundle.model.theta);
  write_file(dir + "/theta.csv", theta.str());

  std::ostringstream phi;
  write_matrix_csv(phi, bundle.model.phi);
  write_file(dir + "/phi.csv", phi.str());

  std::string vocab_txt;
  for (const auto& w : bundle.vocab.words()) {
    vocab_txt += w;
    vocab_txt += '\n';
  }
  write_file(dir + "/vocab.txt", vocab_txt);

  std::ostringstream rel;
  write_relation_csv(bundle.relation, false, rel);
  write_file(dir + "/relation.csv", rel.str());

  std::ostringstream raw;
  write_relation_csv(bundle.relation, true, raw);
  write_file(dir + "/relevance_raw.csv", raw.str());

  std::ostringstream expertise;
  expertise << "collaborator,expertise\n";
  for (int r = 0; r < bundle.relation.collaborator_count(); ++r)
    expertise << bundle.relation.roster[static_cast<std::size_t>(r)] << ','
              << format_double(bundle.relation.expertise(r)) << '\n';
  write_file(dir + "/expertise.csv", expertise.str());
}

ModelBundle load_model_bundle(const std::string& dir) {
  json meta = json::parse(read_file(dir + "/lda.json"), nullptr, false);
  if (meta.is_discarded()) throw DataError(dir + "/lda.json: malformed JSON");
  if (meta.value("format", "") != "tima-model")
    throw DataError(dir + "/lda.json: not a model directory");

  ModelBundle bundle;
  bundle.model.config.k = meta.at("k").get<int>();
  bundle.model.config.alpha = meta.at("alpha").get<double>();
  bundle.model.config.beta = meta.at("beta").get<double>();
  bundle.model.config.iterations = meta.at("iterations").get<int>();
  bundle.model.config.seed = meta.at("seed").get<std::uint64_t>();

  bundle.prep.min_token_len = meta.at("prep").at("min_token_len").get<int>();
  bundle.prep.drop_numeric = meta.at("prep").at("drop_numeric").get<bool>();
  for (const auto& w : meta.at("prep").at("stopwords"))
    bundle.prep.stopwords.insert(w.get<std::string>());
  validate(bundle.prep);

  std::ifstream vocab_in(dir + "/vocab.txt");
  if (!vocab_in) throw DataError("cannot open file: " + dir + "/vocab.txt");
  std::string word;
  while (std::getline(vocab_in, word)) {
    if (!word.empty() && word.back() == '\r') word.pop_back();
    if (word.empty()) throw DataError(dir + "/vocab.txt: empty word line");
    bundle.vocab.add(word);
  }
  bundle.model.vocab_hash = bundle.vocab.hash();
  if (hash_hex(bundle.model.vocab_hash) != meta.at("vocab_hash").get<std::string>())
    throw DataError(dir + ": vocab.txt does not match recorded vocab_hash");

  bundle.model.theta = load_matrix(dir + "/theta.csv");
  bundle.model.phi = load_matrix(dir + "/phi.csv");
  if (bundle.model.phi.cols() != bundle.vocab.size())
    throw DataError(dir + ": phi.csv does not match vocabulary size");
  if (bundle.model.phi.rows() != bundle.model.config.k ||
      bundle.model.theta.cols() != bundle.model.config.k)
    throw DataError(dir + ": matrix shapes do not match k");

  auto [roster, matrix] = load_relation_csv(dir + "/relation.csv");
  auto [raw_roster, raw] = load_relation_csv(dir + "/relevance_raw.csv");
  if (raw_roster != roster)
    throw DataError(dir + ": relation files disagree on the roster");
  bundle.relation.roster = roster;
  bundle.relation.matrix = std::move(matrix);
  bundle.relation.raw_relevance = std::move(raw);
  bundle.relation.k = bundle.model.config.k;

  std::ifstream exp_in(dir + "/expertise.csv");
  if (!exp_in) throw DataError("cannot open file: " + dir + "/expertise.csv");
  std::string line;
  if (!std::getline(exp_in, line) || line != "collaborator,expertise")
    throw DataError(dir + "/expertise.csv: missing header");
  std::vector<double> values;
  std::vector<std::string> exp_roster;
  while (std::getline(exp_in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells = split(line, ',');
    if (cells.size() != 2) throw DataError(dir + "/expertise.csv: bad row");
    exp_roster.push_back(cells[0]);
    values.push_back(std::stod(cells[1]));
  }
  if (exp_roster != roster)
    throw DataError(dir + ": expertise.csv disagrees on the roster");
  bundle.relation.expertise =
      Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));

  check_model(bundle.model);
  check_relation(bundle.relation);
  return bundle;
}

}  // namespace tima
