#include "onto/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace onto {

namespace {

// Fixed English stop-word list (function words only).
constexpr std::array<std::string_view, 50> kStopWords = {
    "a",    "an",    "and",   "are",  "as",   "at",   "be",   "been",
    "but",  "by",    "can",   "could", "did",  "do",   "does", "for",
    "from", "had",   "has",   "have", "if",   "in",   "into", "is",
    "it",   "its",   "may",   "must", "no",   "not",  "of",   "on",
    "or",   "shall", "should", "so",   "some", "such", "than", "that",
    "the",  "these", "this",  "those", "to",   "was",  "were", "will",
    "with", "would"};

bool is_consonant(const std::string& w, int i) {
    switch (w[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !is_consonant(w, i - 1);
        default:
            return true;
    }
}

// Number of consonant-vowel sequences in w[0..end].
int measure(const std::string& w, int end) {
    int n = 0;
    int i = 0;
    while (i <= end && is_consonant(w, i)) ++i;
    for (;;) {
        if (i > end) return n;
        while (i <= end && !is_consonant(w, i)) ++i;
        if (i > end) return n;
        ++n;
        while (i <= end && is_consonant(w, i)) ++i;
    }
}

bool has_vowel(const std::string& w, int end) {
    for (int i = 0; i <= end; ++i)
        if (!is_consonant(w, i)) return true;
    return false;
}

bool double_consonant(const std::string& w, int end) {
    return end >= 1 && w[end] == w[end - 1] && is_consonant(w, end);
}

// consonant-vowel-consonant ending where the final consonant is not w, x or y.
bool cvc(const std::string& w, int end) {
    if (end < 2 || !is_consonant(w, end) || is_consonant(w, end - 1) ||
        !is_consonant(w, end - 2))
        return false;
    char c = w[end];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int stem_end(const std::string& w, std::string_view suffix) {
    return static_cast<int>(w.size() - suffix.size()) - 1;
}

// Replaces `suffix` by `repl` when the stem measure is at least `min_m`.
bool replace_if_m(std::string& w, std::string_view suffix, std::string_view repl,
                  int min_m) {
    if (!ends_with(w, suffix)) return false;
    int end = stem_end(w, suffix);
    if (end < 0 || measure(w, end) <= min_m - 1) return true;  // matched, no change
    w.resize(end + 1);
    w.append(repl);
    return true;
}

}  // namespace

std::string porter_stem(std::string_view word) {
    std::string w(word);
    if (w.size() <= 2) return w;

    // Step 1a
    if (ends_with(w, "sses")) w.resize(w.size() - 2);
    else if (ends_with(w, "ies")) w.resize(w.size() - 2);
    else if (!ends_with(w, "ss") && ends_with(w, "s")) w.resize(w.size() - 1);

    // Step 1b
    bool cleanup = false;
    if (ends_with(w, "eed")) {
        if (measure(w, stem_end(w, "eed")) > 0) w.resize(w.size() - 1);
    } else if (ends_with(w, "ed") && has_vowel(w, stem_end(w, "ed"))) {
        w.resize(w.size() - 2);
        cleanup = true;
    } else if (ends_with(w, "ing") && has_vowel(w, stem_end(w, "ing"))) {
        w.resize(w.size() - 3);
        cleanup = true;
    }
    if (cleanup) {
        int end = static_cast<int>(w.size()) - 1;
        if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
            w += 'e';
        } else if (double_consonant(w, end) && !ends_with(w, "l") &&
                   !ends_with(w, "s") && !ends_with(w, "z")) {
            w.resize(w.size() - 1);
        } else if (measure(w, end) == 1 && cvc(w, end)) {
            w += 'e';
        }
    }

    // Step 1c
    if (ends_with(w, "y") && has_vowel(w, static_cast<int>(w.size()) - 2))
        w.back() = 'i';

    // Step 2
    static const std::pair<std::string_view, std::string_view> step2[] = {
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},  {"biliti", "ble"}};
    for (const auto& [suf, rep] : step2)
        if (replace_if_m(w, suf, rep, 1)) break;

    // Step 3
    static const std::pair<std::string_view, std::string_view> step3[] = {
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""}};
    for (const auto& [suf, rep] : step3)
        if (replace_if_m(w, suf, rep, 1)) break;

    // Step 4
    static const std::string_view step4[] = {
        "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
        "ment", "ent", "ou", "ism", "ate", "iti", "ous", "ive", "ize"};
    for (std::string_view suf : step4) {
        if (!ends_with(w, suf)) continue;
        int end = stem_end(w, suf);
        if (end >= 0 && measure(w, end) > 1) w.resize(end + 1);
        break;
    }
    if (ends_with(w, "ion")) {
        int end = stem_end(w, "ion");
        if (end >= 0 && measure(w, end) > 1 && (w[end] == 's' || w[end] == 't'))
            w.resize(end + 1);
    }

    // Step 5a
    if (ends_with(w, "e")) {
        int end = static_cast<int>(w.size()) - 2;
        int m = measure(w, end);
        if (m > 1 || (m == 1 && !cvc(w, end))) w.resize(w.size() - 1);
    }
    // Step 5b
    if (double_consonant(w, static_cast<int>(w.size()) - 1) && ends_with(w, "l") &&
        measure(w, static_cast<int>(w.size()) - 1) > 1)
        w.resize(w.size() - 1);

    return w;
}

bool is_stop_word(std::string_view token) {
    return std::find(kStopWords.begin(), kStopWords.end(), token) != kStopWords.end();
}

std::string preprocess_label(std::string_view label) {
    std::string key;
    std::string token;
    auto flush = [&] {
        if (!token.empty() && !is_stop_word(token)) {
            if (!key.empty()) key += '_';
            key += token;
        }
        token.clear();
    };
    for (char c : label) {
        if (c == ' ' || c == '\t' || c == '_' || c == '-') flush();
        else token += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    flush();
    if (key.empty())
        throw PreprocessError("label '" + std::string(label) +
                              "' is empty after stop-word removal");
    return key;
}

std::string stem_key(std::string_view lemma_key) {
    std::string out;
    std::string token;
    auto flush = [&] {
        if (!out.empty()) out += '_';
        out += porter_stem(token);
        token.clear();
    };
    for (char c : lemma_key) {
        if (c == '_') flush();
        else token += c;
    }
    flush();
    return out;
}

}  // namespace onto
