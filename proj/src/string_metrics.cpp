#include "bitext/string_metrics.hpp"

#include <algorithm>
#include <numeric>

#include "bitext/unicode.hpp"

namespace bitext {

namespace detail {

std::size_t levenshtein_u32(std::u32string_view a, std::u32string_view b) {
    const std::size_t n = a.size(), m = b.size();
    if (n == 0) return m;
    if (m == 0) return n;
    std::vector<std::size_t> prev(m + 1), cur(m + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] != b[j - 1] ? 1 : 0);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

// round half-up of 100 * (max_len - distance) / max_len
int ratio_from_distance(std::size_t distance, std::size_t max_len) {
    if (max_len == 0) return 100;  // two empty strings are identical
    if (distance > max_len) distance = max_len;
    const std::size_t num = 200 * (max_len - distance) + max_len;
    return static_cast<int>(num / (2 * max_len));
}

}  // namespace detail

namespace {

std::size_t damerau_u32(std::u32string_view a, std::u32string_view b) {
    const std::size_t n = a.size(), m = b.size();
    if (n == 0) return m;
    if (m == 0) return n;
    std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1));
    for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
    for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t sub = d[i - 1][j - 1] + (a[i - 1] != b[j - 1] ? 1 : 0);
            std::size_t best = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
                best = std::min(best, d[i - 2][j - 2] + 1);
            }
            d[i][j] = best;
        }
    }
    return d[n][m];
}

// Longest common substring of a[a_lo,a_hi) x b[b_lo,b_hi); ties resolved by
// smallest start in a, then smallest start in b.
struct Anchor {
    std::size_t a_start = 0, b_start = 0, len = 0;
};

Anchor longest_common_substring(std::u32string_view a, std::size_t a_lo, std::size_t a_hi,
                                std::u32string_view b, std::size_t b_lo, std::size_t b_hi) {
    Anchor best;
    // lengths[j] = common suffix length ending at (i, j)
    std::vector<std::size_t> prev(b_hi - b_lo + 1, 0), cur(b_hi - b_lo + 1, 0);
    for (std::size_t i = a_lo; i < a_hi; ++i) {
        for (std::size_t j = b_lo; j < b_hi; ++j) {
            const std::size_t jj = j - b_lo + 1;
            if (a[i] == b[j]) {
                cur[jj] = prev[jj - 1] + 1;
                if (cur[jj] > best.len) {
                    best.len = cur[jj];
                    best.a_start = i + 1 - cur[jj];
                    best.b_start = j + 1 - cur[jj];
                }
            } else {
                cur[jj] = 0;
            }
        }
        std::swap(prev, cur);
    }
    return best;
}

std::size_t gestalt_matches(std::u32string_view a, std::size_t a_lo, std::size_t a_hi,
                            std::u32string_view b, std::size_t b_lo, std::size_t b_hi) {
    if (a_lo >= a_hi || b_lo >= b_hi) return 0;
    const Anchor anchor = longest_common_substring(a, a_lo, a_hi, b, b_lo, b_hi);
    if (anchor.len == 0) return 0;
    return anchor.len +
           gestalt_matches(a, a_lo, anchor.a_start, b, b_lo, anchor.b_start) +
           gestalt_matches(a, anchor.a_start + anchor.len, a_hi,
                           b, anchor.b_start + anchor.len, b_hi);
}

}  // namespace

std::size_t hamming_distance(std::string_view a, std::string_view b) {
    const std::u32string ua = decode_utf8(a), ub = decode_utf8(b);
    const std::size_t shared = std::min(ua.size(), ub.size());
    std::size_t d = std::max(ua.size(), ub.size()) - shared;
    for (std::size_t i = 0; i < shared; ++i) {
        if (ua[i] != ub[i]) ++d;
    }
    return d;
}

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
    return detail::levenshtein_u32(decode_utf8(a), decode_utf8(b));
}

std::size_t damerau_levenshtein_distance(std::string_view a, std::string_view b) {
    return damerau_u32(decode_utf8(a), decode_utf8(b));
}

int gestalt_similarity(std::string_view a, std::string_view b) {
    std::u32string ua = decode_utf8(a), ub = decode_utf8(b);
    // canonical argument order keeps the result symmetric under the
    // smallest-start anchor tie-break
    if (ub < ua) std::swap(ua, ub);
    const std::size_t total = ua.size() + ub.size();
    if (total == 0) return 100;
    const std::size_t matched = gestalt_matches(ua, 0, ua.size(), ub, 0, ub.size());
    return static_cast<int>((400 * matched + total) / (2 * total));
}

int simple_ratio(std::string_view a, std::string_view b) {
    const std::u32string ua = decode_utf8(a), ub = decode_utf8(b);
    const std::size_t max_len = std::max(ua.size(), ub.size());
    return detail::ratio_from_distance(detail::levenshtein_u32(ua, ub), max_len);
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::u32string current;
    for (char32_t c : decode_utf8(text)) {
        if (is_word_scalar(c)) {
            current.push_back(to_lower_scalar(c));
        } else if (!current.empty()) {
            tokens.push_back(encode_utf8(current));
            current.clear();
        }
    }
    if (!current.empty()) tokens.push_back(encode_utf8(current));
    return tokens;
}

int token_sort_ratio(std::string_view a, std::string_view b) {
    const auto normalize = [](std::string_view s) {
        std::vector<std::u32string> toks;
        for (const std::string& t : tokenize(s)) toks.push_back(decode_utf8(t));
        std::sort(toks.begin(), toks.end());
        std::u32string joined;
        for (std::size_t i = 0; i < toks.size(); ++i) {
            if (i) joined.push_back(U' ');
            joined += toks[i];
        }
        return joined;
    };
    const std::u32string na = normalize(a), nb = normalize(b);
    const std::size_t max_len = std::max(na.size(), nb.size());
    return detail::ratio_from_distance(detail::levenshtein_u32(na, nb), max_len);
}

std::size_t value_words_distance(std::string_view a, std::string_view b) {
    std::vector<std::u32string> ta, tb;
    for (const std::string& t : tokenize(a)) ta.push_back(decode_utf8(t));
    for (const std::string& t : tokenize(b)) tb.push_back(decode_utf8(t));
    std::size_t total = 0;
    for (const auto& w : ta) {
        if (tb.empty()) {
            total += w.size();
            continue;
        }
        std::size_t best = w.size() + 1;
        for (const auto& v : tb) {
            best = std::min(best, detail::levenshtein_u32(w, v));
        }
        total += best;
    }
    return total;
}

}  // namespace bitext
