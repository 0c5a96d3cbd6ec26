#ifndef BITEXT_ALIGNMENT_HPP
#define BITEXT_ALIGNMENT_HPP

#include <map>
#include <string>
#include <vector>

#include "bitext/ingestion.hpp"
#include "bitext/segmentation.hpp"

namespace bitext {

struct DocumentTriple {
    NewsDocument hindi;       // CrawledHindi
    NewsDocument translated;  // TranslatedEnglish, same id as hindi
    NewsDocument english;     // CrawledEnglish selected for the same id
};

struct SentencePair {
    std::string hindi_sentence;
    std::string english_sentence;
    std::string baseline_sentence;  // the translated sentence that matched
    int score = 0;                  // simple_ratio(baseline, english)
    DateStamp date;
    std::string doc_id;
};

struct AlignStats {
    std::size_t missing_translation = 0;
    std::size_t missing_english = 0;
};

struct MineStats {
    std::size_t surplus_hindi_sentences = 0;
    std::size_t surplus_translated_sentences = 0;
};

// Joins the three streams on document id; Hindi documents lacking either
// partner are skipped and counted. Output ordered by (date, id). Throws on
// duplicate ids within one stream.
std::vector<DocumentTriple> align_documents(const std::vector<NewsDocument>& hindi,
                                            const std::vector<NewsDocument>& translated,
                                            const std::vector<NewsDocument>& english,
                                            AlignStats* stats = nullptr);

// Pairs translated sentence i positionally with Hindi sentence i, scores it
// against every crawled English sentence with simple_ratio, and emits the
// best-scoring English sentence when the score clears the threshold. Ties
// pick the smallest English sentence index; at most one pair per Hindi
// sentence. Surplus sentences on either side are skipped and counted.
std::vector<SentencePair> mine_pairs(const DocumentTriple& triple, int threshold,
                                     const SegmenterRules& rules,
                                     MineStats* stats = nullptr);

// mine_pairs over all triples in (date, id) order, once per threshold.
std::map<int, std::vector<SentencePair>> build_corpus(
    const std::vector<DocumentTriple>& triples, const std::vector<int>& thresholds,
    const SegmenterRules& rules, MineStats* stats = nullptr);

// Corpus persistence: JSON-lines with fields date, doc_id, hi, en, baseline,
// score; and a human-readable dump, one pair per paragraph.
void write_pairs_jsonl(const std::filesystem::path& file,
                       const std::vector<SentencePair>& pairs);
std::vector<SentencePair> read_pairs_jsonl(const std::filesystem::path& file);
void write_pairs_text(const std::filesystem::path& file,
                      const std::vector<SentencePair>& pairs);

}  // namespace bitext

#endif
