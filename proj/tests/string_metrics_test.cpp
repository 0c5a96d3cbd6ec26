#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bitext/string_metrics.hpp"
#include "bitext/unicode.hpp"
#include "oracles.hpp"

using namespace bitext;

namespace {

std::string utf8(const std::u32string& s) { return encode_utf8(s); }

// every pair of strings over {a,b} with length <= max_len
std::vector<std::u32string> ab_strings(std::size_t max_len) {
    std::vector<std::u32string> out{U""};
    std::vector<std::u32string> frontier{U""};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::u32string> next;
        for (const auto& s : frontier) {
            next.push_back(s + U'a');
            next.push_back(s + U'b');
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("hamming distance") {
    CHECK(hamming_distance("abc", "abc") == 0);
    CHECK(hamming_distance("karolin", "kathrin") == 3);
    CHECK(hamming_distance("abc", "abcde") == 2);  // padding adds length diff
    CHECK(hamming_distance("", "") == 0);
    CHECK(hamming_distance("", "xyz") == 3);
    // per-scalar, not per-byte
    CHECK(hamming_distance("दिन", "दिन") == 0);
    CHECK(hamming_distance("दिन", "दिल") == 1);
}

TEST_CASE("levenshtein distance") {
    CHECK(levenshtein_distance("", "abc") == 3);
    CHECK(levenshtein_distance("kitten", "sitting") == 3);
    CHECK(levenshtein_distance("flaw", "lawn") == 2);
    CHECK(levenshtein_distance("", "") == 0);
    CHECK(levenshtein_distance("वह गया", "वह आया") == 1);  // per-scalar substitution
}

TEST_CASE("damerau-levenshtein distance") {
    CHECK(damerau_levenshtein_distance("abc", "abc") == 0);
    CHECK(damerau_levenshtein_distance("ab", "ba") == 1);
    // the restricted recursion gives 3 here, not the unrestricted 2
    CHECK(damerau_levenshtein_distance("ca", "abc") == 3);
    CHECK(damerau_levenshtein_distance("", "ab") == 2);
}

TEST_CASE("gestalt similarity") {
    CHECK(gestalt_similarity("abc", "abc") == 100);
    CHECK(gestalt_similarity("abcd", "bcde") == 75);
    CHECK(gestalt_similarity("abc", "xyz") == 0);
    CHECK(gestalt_similarity("", "") == 100);
    CHECK(gestalt_similarity("", "abc") == 0);
}

TEST_CASE("simple ratio") {
    CHECK(simple_ratio("hello", "hello") == 100);
    CHECK(simple_ratio("kitten", "sitting") == 57);
    CHECK(simple_ratio("", "abc") == 0);
    CHECK(simple_ratio("", "") == 100);
}

TEST_CASE("token sort ratio") {
    CHECK(token_sort_ratio("world hello", "hello world") == 100);
    CHECK(token_sort_ratio("the cat sat", "the cat sat") == 100);
    // frozen: lev("big cat runs","big cat walks") = 4, max length 13 -> 69
    CHECK(levenshtein_distance("big cat runs", "big cat walks") == 4);
    CHECK(token_sort_ratio("big cat runs", "cat big walks") == 69);
    CHECK(token_sort_ratio("Hello WORLD", "world hello") == 100);  // case-folded
}

TEST_CASE("value words distance") {
    CHECK(value_words_distance("big cat", "cat bag") == 1);
    CHECK(value_words_distance("abc", "abc") == 0);
    CHECK(value_words_distance("ab cd", "") == 4);
    CHECK(value_words_distance("", "anything") == 0);
}

TEST_CASE("tokenize drops empty tokens and folds case") {
    CHECK(tokenize("  Big,  cat! ") == std::vector<std::string>{"big", "cat"});
    CHECK(tokenize("").empty());
    CHECK(tokenize("---").empty());
}

TEST_CASE("DP distances equal naive recursions on exhaustive {a,b} pairs") {
    const auto strings = ab_strings(4);
    REQUIRE(strings.size() == 31);
    for (const auto& a : strings) {
        for (const auto& b : strings) {
            CHECK(levenshtein_distance(utf8(a), utf8(b)) == oracles::naive_levenshtein(a, b));
            CHECK(damerau_levenshtein_distance(utf8(a), utf8(b)) ==
                  oracles::naive_damerau(a, b));
        }
    }
}

TEST_CASE("metric axioms on random strings") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto a = oracles::random_string(rng, 10, 4);
        const auto b = oracles::random_string(rng, 10, 4);
        const auto c = oracles::random_string(rng, 10, 4);
        const std::string sa = utf8(a), sb = utf8(b), sc = utf8(c);

        CHECK(levenshtein_distance(sa, sb) == levenshtein_distance(sb, sa));
        CHECK(hamming_distance(sa, sb) == hamming_distance(sb, sa));
        CHECK(damerau_levenshtein_distance(sa, sb) == damerau_levenshtein_distance(sb, sa));
        CHECK(levenshtein_distance(sa, sc) <=
              levenshtein_distance(sa, sb) + levenshtein_distance(sb, sc));
        CHECK(damerau_levenshtein_distance(sa, sb) <= levenshtein_distance(sa, sb));

        const std::size_t lev = levenshtein_distance(sa, sb);
        CHECK(lev >= (a.size() > b.size() ? a.size() - b.size() : b.size() - a.size()));
        CHECK(lev <= std::max(a.size(), b.size()));
        if (a.size() == b.size()) {
            CHECK(lev <= hamming_distance(sa, sb));
        }
        CHECK(gestalt_similarity(sa, sb) == gestalt_similarity(sb, sa));
        CHECK(simple_ratio(sa, sb) == simple_ratio(sb, sa));
    }
}

TEST_CASE("simple_ratio is 100 iff equal") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        const auto a = oracles::random_string(rng, 8, 3);
        const auto b = oracles::random_string(rng, 8, 3);
        CHECK((simple_ratio(utf8(a), utf8(b)) == 100) == (a == b));
    }
}

TEST_CASE("token_sort_ratio invariant under word permutation") {
    std::mt19937 rng(99);
    std::vector<std::string> words = {"alpha", "beta", "gamma", "delta", "omega"};
    for (int iter = 0; iter < 200; ++iter) {
        std::shuffle(words.begin(), words.end(), rng);
        std::string shuffled;
        for (const auto& w : words) {
            if (!shuffled.empty()) shuffled += ' ';
            shuffled += w;
        }
        CHECK(token_sort_ratio("alpha beta gamma delta omega", shuffled) == 100);
    }
}

TEST_CASE("gestalt matches the anchor oracle on random pairs") {
    std::mt19937 rng(20171231);
    for (int iter = 0; iter < 1000; ++iter) {
        const auto a = oracles::random_string(rng, 12, 3);
        const auto b = oracles::random_string(rng, 12, 3);
        CHECK(gestalt_similarity(utf8(a), utf8(b)) == oracles::anchor_similarity(a, b));
    }
}
