#ifndef BITEXT_STRING_METRICS_HPP
#define BITEXT_STRING_METRICS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bitext {

// All distances count per Unicode scalar, not per byte. Similarity results
// are integer percentages in [0, 100], rounded half-up.

// Position-wise mismatch count; the shorter string is padded so every
// padded position counts as a mismatch.
std::size_t hamming_distance(std::string_view a, std::string_view b);

// Minimum insert/delete/substitute count.
std::size_t levenshtein_distance(std::string_view a, std::string_view b);

// Restricted (optimal string alignment) variant: adjacent transpositions
// are allowed but transposed substrings are never edited again.
std::size_t damerau_levenshtein_distance(std::string_view a, std::string_view b);

// Ratcliff-Obershelp: recursively anchor on the longest common substring,
// ratio = 2*matched / (|a|+|b|). Ties pick the smallest start in a, then b.
int gestalt_similarity(std::string_view a, std::string_view b);

// round(100 * (1 - lev(a,b) / max(|a|,|b|))); 100 for two empty strings.
int simple_ratio(std::string_view a, std::string_view b);

// simple_ratio of the two strings after tokenizing, lowercasing, sorting
// tokens and joining with single spaces.
int token_sort_ratio(std::string_view a, std::string_view b);

// Directional: sum over tokens of a of the smallest Levenshtein distance to
// any token of b. Empty b: each token of a contributes its own length.
std::size_t value_words_distance(std::string_view a, std::string_view b);

// Split on any non-letter/non-digit scalar; no empty tokens.
std::vector<std::string> tokenize(std::string_view text);

namespace detail {
std::size_t levenshtein_u32(std::u32string_view a, std::u32string_view b);
int ratio_from_distance(std::size_t distance, std::size_t max_len);
}  // namespace detail

}  // namespace bitext

#endif
