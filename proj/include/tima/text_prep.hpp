#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace tima {

/// Settings for the text preprocessing pipeline.
struct PrepConfig {
  std::unordered_set<std::string> stopwords;  // lowercase words
  int min_token_len = 2;
  bool drop_numeric = true;
};

/// The stopword list shipped with the library (sorted, lowercase).
const std::vector<std::string>& default_stopword_list();

/// PrepConfig with the bundled stopword list and default filters.
PrepConfig default_prep_config();

/// One word per line; blank lines and lines starting with '#' are ignored.
std::unordered_set<std::string> load_stopword_file(const std::string& path);

/// Order-independent hash of a stopword set, recorded in model metadata.
std::uint64_t stopword_hash(const std::unordered_set<std::string>& words);

void validate(const PrepConfig& cfg);

/// Lowercases and splits on any non-alphanumeric byte, then applies the
/// length and numeric filters. Non-ASCII bytes count as token characters.
std::vector<std::string> tokenize(std::string_view text, const PrepConfig& cfg);

/// Order-preserving stopword filter. Expects lowercased tokens.
std::vector<std::string> remove_stopwords(std::vector<std::string> tokens,
                                          const PrepConfig& cfg);

/// Porter suffix-stripping stemmer (all five steps). Tokens that are not
/// purely ASCII-alphabetic pass through unchanged.
std::string porter_stem(std::string_view token);

/// Full pipeline: tokenize, drop stopwords, stem, then re-apply the token
/// filters to the stems so that the output is a fixed point of the pipeline.
std::vector<std::string> preprocess(std::string_view text, const PrepConfig& cfg);

}  // namespace tima
