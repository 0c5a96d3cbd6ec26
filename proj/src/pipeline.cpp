#include "bitext/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>

#include <json.hpp>

namespace bitext {

void PipelineConfig::validate() const {
    if (start > end) throw std::invalid_argument("date range start exceeds end");
    if (thresholds.empty()) throw std::invalid_argument("no thresholds given");
    std::set<int> distinct(thresholds.begin(), thresholds.end());
    if (distinct.size() != thresholds.size()) {
        throw std::invalid_argument("thresholds must be distinct");
    }
    for (int t : thresholds) {
        if (t < 0 || t > 100) {
            throw std::invalid_argument("threshold out of range: " + std::to_string(t));
        }
    }
    if (!std::filesystem::is_directory(fixture_dir)) {
        throw std::invalid_argument("fixture directory does not exist: " +
                                    fixture_dir.string());
    }
    if (abbreviations_file && !std::filesystem::is_regular_file(*abbreviations_file)) {
        throw std::invalid_argument("abbreviation file does not exist: " +
                                    abbreviations_file->string());
    }
}

namespace {

std::vector<NewsDocument> load_hindi_documents(const std::filesystem::path& fixture_dir,
                                               MonthYear start, MonthYear end,
                                               std::size_t* dropped_empty) {
    const auto file = fixture_dir / "hindi" / "docs.jsonl";
    std::vector<NewsDocument> docs;
    if (!std::filesystem::is_regular_file(file)) return docs;
    const DateStamp first{start.year, start.month, 1};
    const DateStamp last{end.year, end.month, days_in_month(end.year, end.month)};
    for (NewsDocument& doc : read_documents_jsonl(file)) {
        if (doc.language != Language::Hindi || doc.origin != Origin::CrawledHindi) continue;
        if (doc.date < first || doc.date > last) continue;
        doc.headline = preprocess(doc.headline);
        doc.body = preprocess(doc.body);
        if (doc.headline.empty() || doc.body.empty()) {
            std::cerr << "warning: dropping document " << doc.id
                      << " (empty after preprocessing)\n";
            ++*dropped_empty;
            continue;
        }
        docs.push_back(std::move(doc));
    }
    std::sort(docs.begin(), docs.end(), [](const auto& a, const auto& b) {
        return std::tie(a.date, a.id) < std::tie(b.date, b.id);
    });
    return docs;
}

}  // namespace

MineResult run_mine(const PipelineConfig& config) {
    config.validate();
    std::filesystem::create_directories(config.output_dir);

    const SegmenterRules rules = config.abbreviations_file
                                     ? load_abbreviations(*config.abbreviations_file)
                                     : SegmenterRules::defaults();
    const ProviderSet providers = make_fixture_providers(config.fixture_dir);

    MineResult result;
    const std::vector<NewsDocument> hindi = load_hindi_documents(
        config.fixture_dir, config.start, config.end, &result.documents_dropped_empty);

    std::vector<NewsDocument> translated;
    std::vector<NewsDocument> english;
    for (const NewsDocument& doc : hindi) {
        NewsDocument baseline;
        try {
            baseline = translate_document(doc, providers);
        } catch (const MissingFixture& e) {
            std::cerr << "warning: skipping " << doc.id << ": " << e.what() << '\n';
            ++result.documents_translation_missing;
            continue;
        }
        translated.push_back(baseline);
        ++result.documents_processed;

        std::vector<CandidateLink> links;
        try {
            links = search_links(baseline.headline, providers);
        } catch (const MissingFixture& e) {
            std::cerr << "warning: no search fixture for " << doc.id << '\n';
        }
        std::vector<std::pair<CandidateLink, std::string>> candidates;
        for (const CandidateLink& link : links) {
            std::string body;
            try {
                body = preprocess(fetch_article(link, providers));
            } catch (const std::exception& e) {
                std::cerr << "warning: skipping link " << link.url << ": " << e.what()
                          << '\n';
                ++result.links_failed;
                continue;
            }
            if (body.empty()) continue;
            candidates.emplace_back(link, std::move(body));
        }
        if (auto picked = select_best_candidate(baseline, candidates)) {
            english.push_back(std::move(*picked));
        } else {
            ++result.documents_no_candidate;
        }
    }

    const std::vector<DocumentTriple> triples =
        align_documents(hindi, translated, english, &result.align_stats);
    const auto corpus =
        build_corpus(triples, config.thresholds, rules, &result.mine_stats);

    for (const auto& [threshold, pairs] : corpus) {
        result.pair_counts[threshold] = pairs.size();
        const std::string stem = "corpus_t" + std::to_string(threshold);
        write_pairs_jsonl(config.output_dir / (stem + ".jsonl"), pairs);
        write_pairs_text(config.output_dir / (stem + ".txt"), pairs);
    }

    const CorpusReport report = make_report(
        corpus, {Metric::Gestalt, Metric::Hamming, Metric::DamerauLevenshtein});
    {
        std::ofstream out(config.output_dir / "report.json", std::ios::binary);
        out << report_json(report).dump(2) << '\n';
    }
    {
        std::ofstream out(config.output_dir / "report.txt", std::ios::binary);
        out << render_report(report);
    }

    nlohmann::json per_threshold = nlohmann::json::object();
    for (const auto& [threshold, count] : result.pair_counts) {
        per_threshold[std::to_string(threshold)] = count;
    }
    const nlohmann::json manifest{
        {"range", {{"start", std::to_string(config.start.year) + "-" +
                                 (config.start.month < 10 ? "0" : "") +
                                 std::to_string(config.start.month)},
                   {"end", std::to_string(config.end.year) + "-" +
                               (config.end.month < 10 ? "0" : "") +
                               std::to_string(config.end.month)}}},
        {"documents",
         {{"hindi", hindi.size()},
          {"translated", translated.size()},
          {"english_selected", english.size()},
          {"dropped_empty", result.documents_dropped_empty},
          {"translation_missing", result.documents_translation_missing},
          {"no_candidate", result.documents_no_candidate},
          {"links_failed", result.links_failed}}},
        {"alignment",
         {{"triples", triples.size()},
          {"skipped_missing_translation", result.align_stats.missing_translation},
          {"skipped_missing_english", result.align_stats.missing_english}}},
        {"sentences",
         {{"surplus_hindi", result.mine_stats.surplus_hindi_sentences},
          {"surplus_translated", result.mine_stats.surplus_translated_sentences}}},
        {"pairs", per_threshold}};
    std::ofstream manifest_out(config.output_dir / "manifest.json", std::ios::binary);
    manifest_out << manifest.dump(2) << '\n';

    return result;
}

}  // namespace bitext
