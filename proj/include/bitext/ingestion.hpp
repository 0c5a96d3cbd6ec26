#ifndef BITEXT_INGESTION_HPP
#define BITEXT_INGESTION_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bitext/segmentation.hpp"

namespace bitext {

struct DateStamp {
    int year = 0;
    int month = 0;
    int day = 0;

    bool is_valid() const;
    std::string iso() const;                       // YYYY-MM-DD
    static DateStamp parse_iso(std::string_view);  // throws std::invalid_argument

    friend auto operator<=>(const DateStamp&, const DateStamp&) = default;
};

struct MonthYear {
    int year = 0;
    int month = 0;
    static MonthYear parse(std::string_view);  // "YYYY-MM"
    friend auto operator<=>(const MonthYear&, const MonthYear&) = default;
};

int days_in_month(int year, int month);

// Every calendar day from the 1st of the start month through the last day of
// the end month. Throws std::invalid_argument when start > end.
std::vector<DateStamp> enumerate_dates(MonthYear start, MonthYear end);

enum class Origin { CrawledHindi, TranslatedEnglish, CrawledEnglish };

struct NewsDocument {
    std::string id;
    DateStamp date;
    Language language = Language::Hindi;
    std::string headline;
    std::string body;
    std::string source_url;  // empty for translated documents
    Origin origin = Origin::CrawledHindi;
};

struct CandidateLink {
    std::string url;
    int rank = 0;  // 1-based search result position
};

struct MissingFixture : std::runtime_error {
    explicit MissingFixture(const std::string& key)
        : std::runtime_error("no fixture entry for key: " + key), key(key) {}
    std::string key;
};

struct ProviderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TranslationProvider {
  public:
    virtual ~TranslationProvider() = default;
    virtual std::string translate(const std::string& text) = 0;
};

class SearchProvider {
  public:
    virtual ~SearchProvider() = default;
    virtual std::vector<CandidateLink> search(const std::string& headline) = 0;
};

class FetchProvider {
  public:
    virtual ~FetchProvider() = default;
    virtual std::string fetch(const std::string& url) = 0;
};

struct ProviderSet {
    std::shared_ptr<TranslationProvider> translator;
    std::shared_ptr<SearchProvider> searcher;
    std::shared_ptr<FetchProvider> fetcher;
};

// Fixture entries live in <dir>/translations, <dir>/searches, <dir>/pages.
// Each entry file is named by the FNV-1a 64-bit hex hash of the lookup key;
// its first line is the verbatim key (checked on read), the rest is the
// value. Search entries list URLs one per line in rank order.
ProviderSet make_fixture_providers(const std::filesystem::path& dir);
std::string fixture_key_hash(std::string_view key);
void write_fixture_entry(const std::filesystem::path& dir, std::string_view kind,
                         std::string_view key, std::string_view value);

// Strips markup (script/style content removed wholesale), decodes common
// HTML entities, collapses whitespace runs and trims.
std::string preprocess(std::string_view raw);

// Requires a Hindi document; returns its TranslatedEnglish twin with the
// same id and date.
NewsDocument translate_document(const NewsDocument& doc, const ProviderSet& providers);

// At most the top 10 links, rank-ordered. Headline must be non-empty.
std::vector<CandidateLink> search_links(const std::string& headline,
                                        const ProviderSet& providers);

std::string fetch_article(const CandidateLink& link, const ProviderSet& providers);

// Picks the candidate whose preprocessed body maximizes token_sort_ratio
// against the baseline body; ties go to the lowest rank. Candidate bodies
// are expected preprocessed already.
std::optional<NewsDocument> select_best_candidate(
    const NewsDocument& baseline,
    const std::vector<std::pair<CandidateLink, std::string>>& candidates);

// JSON-lines persistence: one object per document with fields id, date,
// language, origin, headline, body, source_url.
std::vector<NewsDocument> read_documents_jsonl(const std::filesystem::path& file);
void write_documents_jsonl(const std::filesystem::path& file,
                           const std::vector<NewsDocument>& docs);

std::string to_string(Origin origin);
std::string to_string(Language lang);

}  // namespace bitext

#endif
