#include "tima/text_prep.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "tima/errors.hpp"
#include "tima/io_util.hpp"

namespace tima {

namespace {

bool is_ascii_alnum(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

bool is_token_char(unsigned char c) {
  // Non-ASCII bytes are treated as letters so UTF-8 sequences stay intact.
  return is_ascii_alnum(c) || c >= 0x80;
}

bool is_numeric(const std::string& token) {
  return std::all_of(token.begin(), token.end(),
                     [](unsigned char c) { return c >= '0' && c <= '9'; });
}

bool passes_filters(const std::string& token, const PrepConfig& cfg) {
  if (static_cast<int>(token.size()) < cfg.min_token_len) return false;
  if (cfg.drop_numeric && is_numeric(token)) return false;
  return true;
}

}  // namespace

std::unordered_set<std::string> load_stopword_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open stopword file: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line.resize(hash_pos);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    std::size_t start = 0;
    while (start < line.size() &&
           std::isspace(static_cast<unsigned char>(line[start])))
      ++start;
    if (start > 0) line.erase(0, start);
    if (line.empty()) continue;
    std::transform(line.begin(), line.end(), line.begin(), [](unsigned char c) {
      return static_cast<char>(std::tolower(c));
    });
    words.insert(line);
  }
  if (words.empty()) throw DataError("stopword file has no words: " + path);
  return words;
}

std::uint64_t stopword_hash(const std::unordered_set<std::string>& words) {
  std::vector<std::string> sorted(words.begin(), words.end());
  std::sort(sorted.begin(), sorted.end());
  std::string joined;
  for (const auto& w : sorted) {
    joined += w;
    joined += '\n';
  }
  return fnv1a(joined);
}

void validate(const PrepConfig& cfg) {
  if (cfg.stopwords.empty()) throw UsageError("stopword list must not be empty");
  for (const auto& w : cfg.stopwords) {
    for (unsigned char c : w)
      if (c >= 'A' && c <= 'Z')
        throw UsageError("stopword list must be lowercase, got: " + w);
  }
  if (cfg.min_token_len < 1) throw UsageError("min_token_len must be >= 1");
}

std::vector<std::string> tokenize(std::string_view text, const PrepConfig& cfg) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      if (passes_filters(current, cfg)) tokens.push_back(current);
      current.clear();
    }
  };
  for (unsigned char c : text) {
    if (is_token_char(c)) {
      current.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32)
                                             : static_cast<char>(c));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const PrepConfig& cfg) {
  std::erase_if(tokens, [&](const std::string& t) {
    return cfg.stopwords.contains(t);
  });
  return tokens;
}

std::vector<std::string> preprocess(std::string_view text,
                                    const PrepConfig& cfg) {
  std::vector<std::string> tokens = remove_stopwords(tokenize(text, cfg), cfg);
  std::vector<std::string> stems;
  stems.reserve(tokens.size());
  for (const std::string& t : tokens) {
    std::string s = porter_stem(t);
    // Stems can land in the stopword set or under the length floor; refilter
    // so the pipeline output is a fixed point.
    if (passes_filters(s, cfg) && !cfg.stopwords.contains(s))
      stems.push_back(std::move(s));
  }
  return stems;
}

}  // namespace tima
