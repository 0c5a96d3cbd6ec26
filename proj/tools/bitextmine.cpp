// Command-line front end: mine / eval / dist / segment.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "bitext/pipeline.hpp"
#include "bitext/string_metrics.hpp"

namespace {

using namespace bitext;

std::vector<int> parse_thresholds(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

int cmd_mine(const std::string& start, const std::string& end,
             const std::string& thresholds, const std::string& providers,
             const std::string& out_dir, const std::string& abbrev) {
    PipelineConfig config;
    try {
        config.start = MonthYear::parse(start);
        config.end = MonthYear::parse(end);
        config.thresholds = parse_thresholds(thresholds);
        config.output_dir = out_dir;
        if (!abbrev.empty()) config.abbreviations_file = abbrev;
        if (providers.rfind("fixture:", 0) == 0) {
            config.fixture_dir = providers.substr(8);
        } else if (providers == "live") {
            // Live Google Translate/Search integration is not bundled; the
            // provider interface exists so one can be slotted in.
            std::cerr << "error: live provider mode is not available in this build; "
                         "use --providers fixture:<dir>\n";
            return 2;
        } else {
            std::cerr << "error: unknown provider mode: " << providers << '\n';
            return 2;
        }
        config.validate();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    try {
        const MineResult result = run_mine(config);
        if (result.documents_processed == 0) {
            std::cerr << "error: no documents processed\n";
            return 1;
        }
        for (const auto& [threshold, count] : result.pair_counts) {
            std::cout << "threshold " << threshold << ": " << count << " pairs\n";
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

// Threshold of an eval input: corpus_t<k>.jsonl filename if present, else
// the smallest score in the file.
int infer_threshold(const std::filesystem::path& path,
                    const std::vector<SentencePair>& pairs) {
    std::smatch m;
    const std::string name = path.filename().string();
    static const std::regex pattern("corpus_t([0-9]+)\\.");
    if (std::regex_search(name, m, pattern)) return std::stoi(m[1]);
    int min_score = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        min_score = i == 0 ? pairs[i].score : std::min(min_score, pairs[i].score);
    }
    return min_score;
}

int cmd_eval(const std::vector<std::string>& corpus_paths, const std::string& metrics_csv,
             const std::string& out_dir) {
    std::vector<Metric> metrics;
    {
        std::stringstream ss(metrics_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            const auto metric = metric_from_string(item);
            if (!metric) {
                std::cerr << "error: unknown metric: " << item << '\n';
                return 2;
            }
            metrics.push_back(*metric);
        }
    }
    std::map<int, std::vector<SentencePair>> corpus;
    for (const std::string& path : corpus_paths) {
        try {
            auto pairs = read_pairs_jsonl(path);
            corpus[infer_threshold(path, pairs)] = std::move(pairs);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
    }
    const CorpusReport report = make_report(corpus, metrics);
    std::filesystem::create_directories(out_dir);
    {
        std::ofstream out(std::filesystem::path(out_dir) / "report.json",
                          std::ios::binary);
        out << report_json(report).dump(2) << '\n';
    }
    const std::string text = render_report(report);
    {
        std::ofstream out(std::filesystem::path(out_dir) / "report.txt",
                          std::ios::binary);
        out << text;
    }
    std::cout << text;
    return 0;
}

int cmd_dist(const std::string& metric, const std::string& a, const std::string& b) {
    try {
        if (metric == "hamming") {
            std::cout << hamming_distance(a, b) << '\n';
        } else if (metric == "lev") {
            std::cout << levenshtein_distance(a, b) << '\n';
        } else if (metric == "dl") {
            std::cout << damerau_levenshtein_distance(a, b) << '\n';
        } else if (metric == "gestalt") {
            std::cout << gestalt_similarity(a, b) << '\n';
        } else if (metric == "ratio") {
            std::cout << simple_ratio(a, b) << '\n';
        } else if (metric == "token_sort") {
            std::cout << token_sort_ratio(a, b) << '\n';
        } else if (metric == "value_words") {
            std::cout << value_words_distance(a, b) << '\n';
        } else {
            std::cerr << "error: unknown metric: " << metric << '\n';
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

int cmd_segment(const std::string& lang_name, const std::string& input_path,
                const std::string& abbrev) {
    Language lang;
    if (lang_name == "hi") {
        lang = Language::Hindi;
    } else if (lang_name == "en") {
        lang = Language::English;
    } else {
        std::cerr << "error: unknown language: " << lang_name << " (expected hi|en)\n";
        return 2;
    }
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open " << input_path << '\n';
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        const SegmenterRules rules =
            abbrev.empty() ? SegmenterRules::defaults() : load_abbreviations(abbrev);
        for (const std::string& sentence :
             sentence_texts(text, split_sentences(text, lang, rules))) {
            std::cout << sentence << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hindi-English comparable-news parallel corpus miner"};
    app.require_subcommand(1);

    std::string start, end, out_dir, abbrev;
    std::string thresholds = "50,60,70,80";
    std::string providers;
    auto* mine = app.add_subcommand("mine", "run the full mining pipeline");
    mine->add_option("--start", start, "start month (YYYY-MM)")->required();
    mine->add_option("--end", end, "end month (YYYY-MM)")->required();
    mine->add_option("--thresholds", thresholds, "comma-separated percentages");
    mine->add_option("--providers", providers, "fixture:<dir> or live")->required();
    mine->add_option("--out", out_dir, "output directory")->required();
    mine->add_option("--abbrev", abbrev, "extra abbreviation list file");

    std::vector<std::string> corpus_paths;
    std::string metrics = "gestalt,hamming,dl";
    std::string eval_out = ".";
    auto* eval = app.add_subcommand("eval", "score an existing corpus");
    eval->add_option("corpus", corpus_paths, "corpus JSON-lines file(s)")->required();
    eval->add_option("--metrics", metrics, "comma-separated metric names");
    eval->add_option("--out", eval_out, "report output directory");

    std::string dist_metric, dist_a, dist_b;
    auto* dist = app.add_subcommand("dist", "compute one similarity/distance");
    dist->add_option("metric", dist_metric,
                     "hamming|lev|dl|gestalt|ratio|token_sort|value_words")
        ->required();
    dist->add_option("a", dist_a, "first string")->required();
    dist->add_option("b", dist_b, "second string")->required();

    std::string seg_lang, seg_input, seg_abbrev;
    auto* segment = app.add_subcommand("segment", "split a file into sentences");
    segment->add_option("lang", seg_lang, "hi|en")->required();
    segment->add_option("input", seg_input, "UTF-8 input file")->required();
    segment->add_option("--abbrev", seg_abbrev, "extra abbreviation list file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (mine->parsed()) return cmd_mine(start, end, thresholds, providers, out_dir, abbrev);
    if (eval->parsed()) return cmd_eval(corpus_paths, metrics, eval_out);
    if (dist->parsed()) return cmd_dist(dist_metric, dist_a, dist_b);
    if (segment->parsed()) return cmd_segment(seg_lang, seg_input, seg_abbrev);
    return 2;
}
