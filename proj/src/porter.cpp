#include <string>
#include <string_view>

#include "tima/text_prep.hpp"

// Porter's 1980 suffix-stripping algorithm. Conditions are written against
// the measure m of a stem, where a word has the form [C](VC)^m[V] with C a
// consonant run and V a vowel run. Y counts as a vowel when preceded by a
// consonant.

namespace tima {

namespace {

bool is_consonant(const std::string& w, std::size_t i) {
  switch (w[i]) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// m of the prefix w[0..len).
int measure(const std::string& w, std::size_t len) {
  std::size_t i = 0;
  while (i < len && is_consonant(w, i)) ++i;
  int m = 0;
  while (i < len) {
    while (i < len && !is_consonant(w, i)) ++i;
    if (i >= len) break;
    ++m;
    while (i < len && is_consonant(w, i)) ++i;
  }
  return m;
}

bool has_vowel(const std::string& w, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    if (!is_consonant(w, i)) return true;
  return false;
}

// *d: the prefix w[0..len) ends with a double consonant.
bool ends_double_consonant(const std::string& w, std::size_t len) {
  return len >= 2 && w[len - 1] == w[len - 2] && is_consonant(w, len - 1);
}

// *o: the prefix w[0..len) ends consonant-vowel-consonant where the final
// consonant is not w, x or y.
bool ends_cvc(const std::string& w, std::size_t len) {
  if (len < 3) return false;
  if (!is_consonant(w, len - 1) || is_consonant(w, len - 2) ||
      !is_consonant(w, len - 3))
    return false;
  char c = w[len - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// First matching suffix decides; the replacement is applied only when the
// stem measure clears min_m. Lists are ordered so that no earlier entry is a
// proper suffix of a later one.
bool apply_rules(std::string& w, const Rule* rules, std::size_t n, int min_m) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!ends_with(w, rules[i].suffix)) continue;
    std::size_t stem_len = w.size() - rules[i].suffix.size();
    if (measure(w, stem_len) > min_m) {
      w.resize(stem_len);
      w.append(rules[i].replacement);
    }
    return true;
  }
  return false;
}

void step1a(std::string& w) {
  if (ends_with(w, "sses")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ies")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ss")) {
    // unchanged
  } else if (ends_with(w, "s")) {
    w.resize(w.size() - 1);
  }
}

void step1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed") && has_vowel(w, w.size() - 2)) {
    w.resize(w.size() - 2);
    stripped = true;
  } else if (ends_with(w, "ing") && has_vowel(w, w.size() - 3)) {
    w.resize(w.size() - 3);
    stripped = true;
  }
  if (!stripped) return;

  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (ends_double_consonant(w, w.size())) {
    char c = w.back();
    if (c != 'l' && c != 's' && c != 'z') w.pop_back();
  } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
    w.push_back('e');
  }
}

void step1c(std::string& w) {
  if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) w.back() = 'i';
}

void step2(std::string& w) {
  static const Rule rules[] = {
      {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
      {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
      {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
      {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
      {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
      {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
      {"iviti", "ive"},   {"biliti", "ble"},
  };
  apply_rules(w, rules, std::size(rules), 0);
}

void step3(std::string& w) {
  static const Rule rules[] = {
      {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
      {"ical", "ic"},  {"ful", ""},   {"ness", ""},
  };
  apply_rules(w, rules, std::size(rules), 0);
}

void step4(std::string& w) {
  static const Rule rules[] = {
      {"al", ""},    {"ance", ""}, {"ence", ""},  {"er", ""},  {"ic", ""},
      {"able", ""},  {"ible", ""}, {"ant", ""},   {"ement", ""},
      {"ment", ""},  {"ent", ""},  {"ou", ""},    {"ism", ""}, {"ate", ""},
      {"iti", ""},   {"ous", ""},  {"ive", ""},   {"ize", ""},
  };
  // "ion" only drops after s or t; handled apart from the plain list.
  if (ends_with(w, "ion")) {
    std::size_t stem_len = w.size() - 3;
    if (stem_len > 0 && (w[stem_len - 1] == 's' || w[stem_len - 1] == 't') &&
        measure(w, stem_len) > 1)
      w.resize(stem_len);
    return;
  }
  apply_rules(w, rules, std::size(rules), 1);
}

void step5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  int m = measure(w, w.size() - 1);
  if (m > 1 || (m == 1 && !ends_cvc(w, w.size() - 1))) w.pop_back();
}

void step5b(std::string& w) {
  if (w.back() == 'l' && ends_double_consonant(w, w.size()) &&
      measure(w, w.size()) > 1)
    w.pop_back();
}

}  // namespace

std::string porter_stem(std::string_view token) {
  std::string w(token);
  if (w.size() <= 2) return w;
  for (char c : w)
    if (c < 'a' || c > 'z') return w;

  step1a(w);
  step1b(w);
  step1c(w);
  step2(w);
  step3(w);
  step4(w);
  step5a(w);
  step5b(w);
  return w;
}

}  // namespace tima
