#include "bitext/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bitext/string_metrics.hpp"
#include "bitext/unicode.hpp"

namespace bitext {

int pair_accuracy(const SentencePair& pair, Metric metric) {
    const std::string& a = pair.baseline_sentence;
    const std::string& b = pair.english_sentence;
    switch (metric) {
        case Metric::Gestalt:
            return gestalt_similarity(a, b);
        case Metric::Hamming: {
            const std::size_t max_len =
                std::max(decode_utf8(a).size(), decode_utf8(b).size());
            return detail::ratio_from_distance(hamming_distance(a, b), max_len);
        }
        case Metric::DamerauLevenshtein: {
            const std::size_t max_len =
                std::max(decode_utf8(a).size(), decode_utf8(b).size());
            return detail::ratio_from_distance(damerau_levenshtein_distance(a, b),
                                               max_len);
        }
    }
    return 0;
}

double corpus_accuracy(const std::vector<SentencePair>& pairs, Metric metric) {
    if (pairs.empty()) {
        throw std::invalid_argument("accuracy undefined for an empty corpus");
    }
    long long sum = 0;
    for (const SentencePair& p : pairs) sum += pair_accuracy(p, metric);
    const double mean = static_cast<double>(sum) / static_cast<double>(pairs.size());
    return std::floor(mean * 100.0 + 0.5) / 100.0;  // two decimals, half-up
}

CorpusReport make_report(const std::map<int, std::vector<SentencePair>>& corpus,
                         const std::vector<Metric>& metrics) {
    const auto wanted = [&](Metric m) {
        return std::find(metrics.begin(), metrics.end(), m) != metrics.end();
    };
    CorpusReport report;
    for (const auto& [threshold, pairs] : corpus) {
        ThresholdRow row;
        row.threshold = threshold;
        row.pair_count = pairs.size();
        if (!pairs.empty()) {
            if (wanted(Metric::Gestalt))
                row.gestalt = corpus_accuracy(pairs, Metric::Gestalt);
            if (wanted(Metric::Hamming))
                row.hamming = corpus_accuracy(pairs, Metric::Hamming);
            if (wanted(Metric::DamerauLevenshtein))
                row.damerau_levenshtein =
                    corpus_accuracy(pairs, Metric::DamerauLevenshtein);
        }
        report.rows.push_back(row);
    }
    return report;
}

namespace {

std::string with_thousands(std::size_t n) {
    std::string digits = std::to_string(n);
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i && (digits.size() - i) % 3 == 0) out += ',';
        out += digits[i];
    }
    return out;
}

std::string format_accuracy(const std::optional<double>& value) {
    if (!value) return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", *value);
    return buf;
}

}  // namespace

std::string render_report(const CorpusReport& report) {
    const std::vector<std::string> headers = {"Threshold", "Pairs", "Gestalt",
                                              "Hamming", "Damerau-Levenshtein"};
    std::vector<std::vector<std::string>> rows;
    for (const ThresholdRow& row : report.rows) {
        rows.push_back({std::to_string(row.threshold) + "%",
                        with_thousands(row.pair_count),
                        format_accuracy(row.gestalt), format_accuracy(row.hamming),
                        format_accuracy(row.damerau_levenshtein)});
    }
    std::vector<std::size_t> widths;
    for (std::size_t c = 0; c < headers.size(); ++c) {
        std::size_t w = headers[c].size();
        for (const auto& row : rows) w = std::max(w, row[c].size());
        widths.push_back(w);
    }
    std::ostringstream out;
    const auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) out << "  ";
            out << cells[c];
            if (c + 1 < cells.size()) {
                out << std::string(widths[c] - cells[c].size(), ' ');
            }
        }
        out << '\n';
    };
    emit_row(headers);
    std::size_t rule_len = 0;
    for (std::size_t c = 0; c < widths.size(); ++c) rule_len += widths[c] + (c ? 2 : 0);
    out << std::string(rule_len, '-') << '\n';
    for (const auto& row : rows) emit_row(row);
    return out.str();
}

nlohmann::json report_json(const CorpusReport& report) {
    nlohmann::json thresholds = nlohmann::json::array();
    for (const ThresholdRow& row : report.rows) {
        nlohmann::json accuracy{
            {"gestalt", row.gestalt ? nlohmann::json(*row.gestalt) : nullptr},
            {"hamming", row.hamming ? nlohmann::json(*row.hamming) : nullptr},
            {"damerau_levenshtein", row.damerau_levenshtein
                                        ? nlohmann::json(*row.damerau_levenshtein)
                                        : nullptr}};
        thresholds.push_back({{"threshold", row.threshold},
                              {"pairs", row.pair_count},
                              {"accuracy", accuracy}});
    }
    return {{"thresholds", thresholds}};
}

std::string to_string(Metric metric) {
    switch (metric) {
        case Metric::Gestalt: return "gestalt";
        case Metric::Hamming: return "hamming";
        case Metric::DamerauLevenshtein: return "damerau_levenshtein";
    }
    return "";
}

std::optional<Metric> metric_from_string(const std::string& name) {
    if (name == "gestalt") return Metric::Gestalt;
    if (name == "hamming") return Metric::Hamming;
    if (name == "dl" || name == "damerau_levenshtein") return Metric::DamerauLevenshtein;
    return std::nullopt;
}

}  // namespace bitext
