#pragma once

#include <string>
#include <string_view>

#include "onto/errors.hpp"

namespace onto {

// Classic Porter suffix-stripping stemmer ("universities" -> "universiti").
// Input is expected lowercase.
std::string porter_stem(std::string_view word);

bool is_stop_word(std::string_view token);

// Turns a concept label into a lemma key: lowercase, stop words removed,
// remaining tokens joined with underscores ("Corporate Body" ->
// "corporate_body"). Throws PreprocessError when nothing is left.
std::string preprocess_label(std::string_view label);

// Per-token stemmed variant of a lemma key, used as the fallback lookup key.
std::string stem_key(std::string_view lemma_key);

}  // namespace onto
