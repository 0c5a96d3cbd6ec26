#ifndef BITEXT_SEGMENTATION_HPP
#define BITEXT_SEGMENTATION_HPP

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace bitext {

enum class Language { Hindi, English };

// Half-open byte range into the source text; both ends fall on scalar
// boundaries.
struct SentenceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

struct SegmenterRules {
    // Stored as written; English lookup is case-insensitive.
    std::set<std::string> abbreviations;
    std::size_t max_abbrev_token_len = 2;

    static SegmenterRules defaults();
};

// One token per line, '#' comment lines and blank lines ignored. Tokens are
// added to the default rule set.
SegmenterRules load_abbreviations(const std::filesystem::path& file);

// Sentence boundary disambiguation. Delimiters are '!', '?', '.' for English
// and '!', '?', U+0964 danda for Hindi. A '.' does not close a sentence when
// it sits between two digits, follows a known abbreviation, or follows a
// short all-letter token (length <= max_abbrev_token_len). Runs of delimiters
// close one sentence at the last delimiter of the run. Trailing text without
// a delimiter forms a final span.
std::vector<SentenceSpan> split_sentences(std::string_view text, Language lang,
                                          const SegmenterRules& rules);

// Slices the span substrings; throws std::out_of_range on a corrupted span.
std::vector<std::string> sentence_texts(std::string_view text,
                                        const std::vector<SentenceSpan>& spans);

}  // namespace bitext

#endif
