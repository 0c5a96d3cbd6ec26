#ifndef BITEXT_EVALUATION_HPP
#define BITEXT_EVALUATION_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bitext/alignment.hpp"

namespace bitext {

enum class Metric { Gestalt, Hamming, DamerauLevenshtein };

inline constexpr Metric kAllMetrics[] = {Metric::Gestalt, Metric::Hamming,
                                         Metric::DamerauLevenshtein};

// Normalized similarity between the pair's baseline and crawled English
// sentences, integer percent.
int pair_accuracy(const SentencePair& pair, Metric metric);

// Mean pair_accuracy, rounded half-up to two decimals. Throws
// std::invalid_argument on an empty corpus.
double corpus_accuracy(const std::vector<SentencePair>& pairs, Metric metric);

struct ThresholdRow {
    int threshold = 0;
    std::size_t pair_count = 0;
    // absent when pair_count is 0 or the metric was not requested
    std::optional<double> gestalt;
    std::optional<double> hamming;
    std::optional<double> damerau_levenshtein;
};

struct CorpusReport {
    std::vector<ThresholdRow> rows;
};

CorpusReport make_report(const std::map<int, std::vector<SentencePair>>& corpus,
                         const std::vector<Metric>& metrics);

// Aligned-column plain-text table, one row per threshold.
std::string render_report(const CorpusReport& report);

// {"thresholds":[{"threshold":..,"pairs":..,"accuracy":{"gestalt":..,...}}]}
nlohmann::json report_json(const CorpusReport& report);

std::string to_string(Metric metric);
std::optional<Metric> metric_from_string(const std::string& name);

}  // namespace bitext

#endif
