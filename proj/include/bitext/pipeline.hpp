#ifndef BITEXT_PIPELINE_HPP
#define BITEXT_PIPELINE_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bitext/alignment.hpp"
#include "bitext/evaluation.hpp"
#include "bitext/ingestion.hpp"

namespace bitext {

struct PipelineConfig {
    MonthYear start;
    MonthYear end;
    std::vector<int> thresholds = {50, 60, 70, 80};
    std::filesystem::path fixture_dir;  // fixture provider mode
    std::filesystem::path output_dir;
    std::optional<std::filesystem::path> abbreviations_file;

    // Throws std::invalid_argument when the config violates its invariants.
    void validate() const;
};

struct MineResult {
    std::size_t documents_processed = 0;
    std::size_t documents_dropped_empty = 0;
    std::size_t documents_translation_missing = 0;
    std::size_t documents_no_candidate = 0;
    std::size_t links_failed = 0;
    AlignStats align_stats;
    MineStats mine_stats;
    std::map<int, std::size_t> pair_counts;
};

// Runs the full mining loop over fixture-backed providers and writes
// corpus_t<threshold>.jsonl / .txt, manifest.json, report.json and
// report.txt into the output directory.
MineResult run_mine(const PipelineConfig& config);

}  // namespace bitext

#endif
