#include "bitext/segmentation.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "bitext/unicode.hpp"

namespace bitext {

namespace {

constexpr char32_t kDanda = 0x0964;

bool is_delimiter(char32_t c, Language lang) {
    if (c == U'!' || c == U'?') return true;
    return lang == Language::English ? c == U'.' : c == kDanda;
}

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c >= 'A' && c <= 'Z') c += 32;
    }
    return out;
}

// Token of word scalars ending immediately before position i.
std::u32string preceding_token(const std::u32string& scalars, std::size_t i) {
    std::size_t lo = i;
    while (lo > 0 && is_word_scalar(scalars[lo - 1])) --lo;
    return scalars.substr(lo, i - lo);
}

bool period_is_excepted(const DecodedText& text, std::size_t i, Language lang,
                        const SegmenterRules& rules) {
    const std::u32string& s = text.scalars;
    // decimal number: digit '.' digit
    if (i > 0 && i + 1 < s.size() && is_digit_scalar(s[i - 1]) &&
        is_digit_scalar(s[i + 1])) {
        return true;
    }
    const std::u32string token = preceding_token(s, i);
    if (token.empty()) return false;
    std::string utf8 = encode_utf8(token);
    if (lang == Language::English) utf8 = lower_ascii(utf8);
    for (const std::string& abbrev : rules.abbreviations) {
        const std::string key =
            lang == Language::English ? lower_ascii(abbrev) : abbrev;
        if (utf8 == key) return true;
    }
    // short all-letter token ("U.S.", initials)
    if (token.size() <= rules.max_abbrev_token_len &&
        std::all_of(token.begin(), token.end(), is_letter_scalar)) {
        return true;
    }
    return false;
}

}  // namespace

SegmenterRules SegmenterRules::defaults() {
    SegmenterRules rules;
    rules.abbreviations = {"Dr", "Mr",  "Mrs", "Ms", "Prof", "St", "vs", "etc",
                           "Jr", "Sr",  "Inc", "Ltd", "Co",  "No", "Rs"};
    rules.max_abbrev_token_len = 2;
    return rules;
}

SegmenterRules load_abbreviations(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open abbreviation file: " + file.string());
    SegmenterRules rules = SegmenterRules::defaults();
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t");
        line = line.substr(first, last - first + 1);
        if (line.empty() || line[0] == '#') continue;
        rules.abbreviations.insert(line);
    }
    return rules;
}

std::vector<SentenceSpan> split_sentences(std::string_view text, Language lang,
                                          const SegmenterRules& rules) {
    const DecodedText decoded = decode_utf8_with_offsets(text);
    const std::u32string& s = decoded.scalars;
    const std::size_t n = s.size();

    const auto byte_end = [&](std::size_t i) {
        return i + 1 < n ? decoded.offsets[i + 1] : decoded.byte_size;
    };

    std::vector<SentenceSpan> spans;
    std::size_t start = std::string::npos;   // byte offset of current span
    std::size_t last_nonspace = std::string::npos;
    std::size_t i = 0;
    while (i < n) {
        const char32_t c = s[i];
        if (!is_space_scalar(c)) {
            if (start == std::string::npos) start = decoded.offsets[i];
            last_nonspace = i;
        }
        if (start != std::string::npos && is_delimiter(c, lang)) {
            if (c == U'.' && period_is_excepted(decoded, i, lang, rules)) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j + 1 < n && is_delimiter(s[j + 1], lang)) ++j;
            spans.push_back({start, byte_end(j)});
            start = std::string::npos;
            i = j + 1;
            continue;
        }
        ++i;
    }
    if (start != std::string::npos && last_nonspace != std::string::npos) {
        spans.push_back({start, byte_end(last_nonspace)});
    }
    return spans;
}

std::vector<std::string> sentence_texts(std::string_view text,
                                        const std::vector<SentenceSpan>& spans) {
    std::vector<std::string> out;
    out.reserve(spans.size());
    for (const SentenceSpan& span : spans) {
        if (span.begin >= span.end || span.end > text.size()) {
            throw std::out_of_range("corrupted sentence span [" +
                                    std::to_string(span.begin) + ", " +
                                    std::to_string(span.end) + ")");
        }
        out.emplace_back(text.substr(span.begin, span.end - span.begin));
    }
    return out;
}

}  // namespace bitext
