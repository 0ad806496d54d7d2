#include <algorithm>
#include <string>
#include <vector>

#include "tima/text_prep.hpp"

namespace tima {

// Bundled English stopword list, v1. Kept in sync with data/stopwords.txt;
// a hash of the active list is recorded in corpus and model metadata.
const std::vector<std::string>& default_stopword_list() {
  static const std::vector<std::string> words = {
      "a",          "about",      "above",     "after",      "again",
      "against",    "all",        "also",      "although",   "always",
      "am",         "among",      "an",        "and",        "another",
      "any",        "anything",   "anywhere",  "are",        "around",
      "as",         "at",         "be",        "became",     "because",
      "become",     "becomes",    "been",      "before",     "being",
      "below",      "between",    "both",      "but",        "by",
      "came",       "can",        "cannot",    "come",       "could",
      "did",        "do",         "does",      "doing",      "down",
      "during",     "each",       "either",    "else",       "ever",
      "every",      "everything", "few",       "for",        "from",
      "further",    "had",        "has",       "have",       "having",
      "he",         "her",        "here",      "hers",       "herself",
      "him",        "himself",    "his",       "how",        "however",
      "i",          "if",         "in",        "into",       "is",
      "it",         "its",        "itself",    "just",       "least",
      "less",       "let",        "like",      "made",       "make",
      "many",       "may",        "maybe",     "me",         "might",
      "more",       "most",       "much",      "must",       "my",
      "myself",     "neither",    "never",     "next",       "no",
      "nor",        "not",        "now",       "of",         "off",
      "often",      "on",         "once",      "one",        "only",
      "onto",       "or",         "other",     "ought",      "our",
      "ours",       "ourselves",  "out",       "over",       "own",
      "per",        "perhaps",    "quite",     "rather",     "really",
      "said",       "same",       "say",       "says",       "see",
      "seem",       "seemed",     "seems",     "she",        "should",
      "since",      "so",         "some",      "something",  "somewhere",
      "still",      "such",       "take",      "than",       "that",
      "the",        "their",      "theirs",    "them",       "themselves",
      "then",       "there",      "these",     "they",       "this",
      "those",      "through",    "to",        "together",   "too",
      "toward",     "under",      "until",     "up",         "upon",
      "us",         "very",       "want",      "was",        "we",
      "well",       "went",       "were",      "what",       "when",
      "where",      "whether",    "which",     "while",      "who",
      "whom",       "why",        "will",      "with",       "within",
      "without",    "would",      "yet",       "you",        "your",
      "yours",      "yourself",   "yourselves",
  };
  return words;
}

PrepConfig default_prep_config() {
  PrepConfig cfg;
  const auto& words = default_stopword_list();
  cfg.stopwords.insert(words.begin(), words.end());
  return cfg;
}

}  // namespace tima
