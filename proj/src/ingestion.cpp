#include "bitext/ingestion.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bitext/string_metrics.hpp"
#include "bitext/unicode.hpp"

namespace bitext {

// ---------------------------------------------------------------- dates

bool DateStamp::is_valid() const {
    if (month < 1 || month > 12 || day < 1) return false;
    return day <= days_in_month(year, month);
}

std::string DateStamp::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

DateStamp DateStamp::parse_iso(std::string_view s) {
    DateStamp d;
    if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
        std::sscanf(std::string(s).c_str(), "%d-%d-%d", &d.year, &d.month, &d.day) != 3 ||
        !d.is_valid()) {
        throw std::invalid_argument("invalid date: " + std::string(s));
    }
    return d;
}

MonthYear MonthYear::parse(std::string_view s) {
    MonthYear my;
    if (s.size() != 7 || s[4] != '-' ||
        std::sscanf(std::string(s).c_str(), "%d-%d", &my.year, &my.month) != 2 ||
        my.month < 1 || my.month > 12) {
        throw std::invalid_argument("invalid month-year: " + std::string(s) +
                                    " (expected YYYY-MM)");
    }
    return my;
}

int days_in_month(int year, int month) {
    static constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2) {
        const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return lengths[month - 1];
}

std::vector<DateStamp> enumerate_dates(MonthYear start, MonthYear end) {
    if (start > end) {
        throw std::invalid_argument("date range start exceeds end");
    }
    std::vector<DateStamp> out;
    for (MonthYear my = start; my <= end;) {
        for (int day = 1; day <= days_in_month(my.year, my.month); ++day) {
            out.push_back({my.year, my.month, day});
        }
        if (++my.month > 12) {
            my.month = 1;
            ++my.year;
        }
    }
    return out;
}

// ---------------------------------------------------------------- preprocess

namespace {

std::string strip_container(std::string text, const std::string& tag) {
    const std::string open = "<" + tag;
    const std::string close = "</" + tag;
    std::string lower = text;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t begin = lower.find(open, pos);
        if (begin == std::string::npos) {
            out += text.substr(pos);
            break;
        }
        out += text.substr(pos, begin - pos);
        std::size_t end = lower.find(close, begin);
        if (end == std::string::npos) break;  // unterminated; drop the rest
        end = lower.find('>', end);
        pos = end == std::string::npos ? text.size() : end + 1;
    }
    return out;
}

std::string strip_tags(const std::string& text) {
    std::string out;
    bool in_tag = false;
    for (char c : text) {
        if (c == '<') {
            in_tag = true;
        } else if (c == '>' && in_tag) {
            in_tag = false;
            out += ' ';  // tags separate words
        } else if (!in_tag) {
            out += c;
        }
    }
    return out;
}

std::string decode_entities(const std::string& text) {
    static const std::pair<std::string, std::string> named[] = {
        {"amp", "&"},  {"lt", "<"},   {"gt", ">"},
        {"quot", "\""}, {"apos", "'"}, {"nbsp", " "},
    };
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '&') {
            out += text[pos++];
            continue;
        }
        const std::size_t semi = text.find(';', pos + 1);
        if (semi == std::string::npos || semi - pos > 10) {
            out += text[pos++];
            continue;
        }
        const std::string name = text.substr(pos + 1, semi - pos - 1);
        bool decoded = false;
        for (const auto& [n, v] : named) {
            if (name == n) {
                out += v;
                decoded = true;
                break;
            }
        }
        if (!decoded && name.size() > 1 && name[0] == '#') {
            try {
                const unsigned long cp = name[1] == 'x' || name[1] == 'X'
                                             ? std::stoul(name.substr(2), nullptr, 16)
                                             : std::stoul(name.substr(1));
                if (cp > 0 && cp <= 0x10FFFF) {
                    out += encode_utf8(static_cast<char32_t>(cp));
                    decoded = true;
                }
            } catch (const std::exception&) {
            }
        }
        if (decoded) {
            pos = semi + 1;
        } else {
            out += text[pos++];
        }
    }
    return out;
}

}  // namespace

std::string preprocess(std::string_view raw) {
    std::string text = strip_container(std::string(raw), "script");
    text = strip_container(text, "style");
    text = decode_entities(strip_tags(text));
    // collapse whitespace runs (incl. non-breaking space) to single spaces
    std::string out;
    bool pending_space = false;
    for (char32_t c : decode_utf8(text)) {
        if (is_space_scalar(c)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out += ' ';
            pending_space = false;
            out += encode_utf8(c);
        }
    }
    return out;
}

// ---------------------------------------------------------------- fixtures

std::string fixture_key_hash(std::string_view key) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : key) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void write_fixture_entry(const std::filesystem::path& dir, std::string_view kind,
                         std::string_view key, std::string_view value) {
    const auto subdir = dir / kind;
    std::filesystem::create_directories(subdir);
    std::ofstream out(subdir / fixture_key_hash(key), std::ios::binary);
    out << key << '\n' << value;
}

namespace {

// Shared lookup for the three fixture-backed providers.
class FixtureStore {
  public:
    explicit FixtureStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::string lookup(const std::string& kind, const std::string& key) const {
        const auto path = dir_ / kind / fixture_key_hash(key);
        std::ifstream in(path, std::ios::binary);
        if (!in) throw MissingFixture(key);
        std::string stored_key;
        std::getline(in, stored_key);
        if (stored_key != key) {
            throw ProviderError("fixture hash collision or corruption in " +
                                path.string() + ": stored key does not match");
        }
        std::ostringstream rest;
        rest << in.rdbuf();
        return rest.str();
    }

  private:
    std::filesystem::path dir_;
};

class FixtureTranslator : public TranslationProvider {
  public:
    explicit FixtureTranslator(std::shared_ptr<FixtureStore> store)
        : store_(std::move(store)) {}
    std::string translate(const std::string& text) override {
        std::string value = store_->lookup("translations", text);
        while (!value.empty() && (value.back() == '\n' || value.back() == '\r')) {
            value.pop_back();
        }
        return value;
    }

  private:
    std::shared_ptr<FixtureStore> store_;
};

class FixtureSearcher : public SearchProvider {
  public:
    explicit FixtureSearcher(std::shared_ptr<FixtureStore> store)
        : store_(std::move(store)) {}
    std::vector<CandidateLink> search(const std::string& headline) override {
        std::istringstream lines(store_->lookup("searches", headline));
        std::vector<CandidateLink> links;
        std::string line;
        int rank = 1;
        while (std::getline(lines, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty()) continue;
            links.push_back({line, rank++});
        }
        return links;
    }

  private:
    std::shared_ptr<FixtureStore> store_;
};

class FixtureFetcher : public FetchProvider {
  public:
    explicit FixtureFetcher(std::shared_ptr<FixtureStore> store)
        : store_(std::move(store)) {}
    std::string fetch(const std::string& url) override {
        return store_->lookup("pages", url);
    }

  private:
    std::shared_ptr<FixtureStore> store_;
};

}  // namespace

ProviderSet make_fixture_providers(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw std::invalid_argument("fixture directory does not exist: " + dir.string());
    }
    auto store = std::make_shared<FixtureStore>(dir);
    return {std::make_shared<FixtureTranslator>(store),
            std::make_shared<FixtureSearcher>(store),
            std::make_shared<FixtureFetcher>(store)};
}

// ---------------------------------------------------------------- operations

NewsDocument translate_document(const NewsDocument& doc, const ProviderSet& providers) {
    if (doc.language != Language::Hindi) {
        throw std::invalid_argument("translate_document requires a Hindi document");
    }
    NewsDocument out = doc;
    out.language = Language::English;
    out.origin = Origin::TranslatedEnglish;
    out.source_url.clear();
    out.headline = providers.translator->translate(doc.headline);
    out.body = providers.translator->translate(doc.body);
    return out;
}

std::vector<CandidateLink> search_links(const std::string& headline,
                                        const ProviderSet& providers) {
    if (headline.empty()) {
        throw std::invalid_argument("search_links requires a non-empty headline");
    }
    std::vector<CandidateLink> links = providers.searcher->search(headline);
    if (links.size() > 10) links.resize(10);
    return links;
}

std::string fetch_article(const CandidateLink& link, const ProviderSet& providers) {
    if (link.url.empty()) {
        throw std::invalid_argument("fetch_article requires a non-empty url");
    }
    return providers.fetcher->fetch(link.url);
}

std::optional<NewsDocument> select_best_candidate(
    const NewsDocument& baseline,
    const std::vector<std::pair<CandidateLink, std::string>>& candidates) {
    if (baseline.origin != Origin::TranslatedEnglish) {
        throw std::invalid_argument("select_best_candidate requires a translated baseline");
    }
    const CandidateLink* best_link = nullptr;
    const std::string* best_body = nullptr;
    int best_score = -1;
    for (const auto& [link, body] : candidates) {
        const int score = token_sort_ratio(baseline.body, body);
        if (score > best_score ||
            (score == best_score && best_link && link.rank < best_link->rank)) {
            best_score = score;
            best_link = &link;
            best_body = &body;
        }
    }
    if (!best_link) return std::nullopt;
    NewsDocument doc;
    doc.id = baseline.id;
    doc.date = baseline.date;
    doc.language = Language::English;
    doc.origin = Origin::CrawledEnglish;
    doc.headline = baseline.headline;
    doc.body = *best_body;
    doc.source_url = best_link->url;
    return doc;
}

// ---------------------------------------------------------------- jsonl

std::string to_string(Origin origin) {
    switch (origin) {
        case Origin::CrawledHindi: return "crawled_hindi";
        case Origin::TranslatedEnglish: return "translated_english";
        case Origin::CrawledEnglish: return "crawled_english";
    }
    return "";
}

std::string to_string(Language lang) {
    return lang == Language::Hindi ? "hi" : "en";
}

namespace {

Origin origin_from_string(const std::string& s) {
    if (s == "crawled_hindi") return Origin::CrawledHindi;
    if (s == "translated_english") return Origin::TranslatedEnglish;
    if (s == "crawled_english") return Origin::CrawledEnglish;
    throw std::invalid_argument("unknown origin: " + s);
}

Language language_from_string(const std::string& s) {
    if (s == "hi") return Language::Hindi;
    if (s == "en") return Language::English;
    throw std::invalid_argument("unknown language: " + s);
}

}  // namespace

std::vector<NewsDocument> read_documents_jsonl(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open document file: " + file.string());
    std::vector<NewsDocument> docs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::runtime_error(file.string() + ":" + std::to_string(lineno) +
                                     ": " + e.what());
        }
        NewsDocument doc;
        doc.id = j.at("id").get<std::string>();
        doc.date = DateStamp::parse_iso(j.at("date").get<std::string>());
        doc.language = language_from_string(j.at("language").get<std::string>());
        doc.origin = origin_from_string(j.at("origin").get<std::string>());
        doc.headline = j.at("headline").get<std::string>();
        doc.body = j.at("body").get<std::string>();
        doc.source_url = j.value("source_url", "");
        docs.push_back(std::move(doc));
    }
    return docs;
}

void write_documents_jsonl(const std::filesystem::path& file,
                           const std::vector<NewsDocument>& docs) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write document file: " + file.string());
    for (const NewsDocument& doc : docs) {
        nlohmann::json j{{"id", doc.id},
                         {"date", doc.date.iso()},
                         {"language", to_string(doc.language)},
                         {"origin", to_string(doc.origin)},
                         {"headline", doc.headline},
                         {"body", doc.body},
                         {"source_url", doc.source_url}};
        out << j.dump() << '\n';
    }
}

}  // namespace bitext
