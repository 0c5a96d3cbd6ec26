#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bitext/ingestion.hpp"
#include "bitext/string_metrics.hpp"

using namespace bitext;

namespace {

struct TempFixtureDir {
    std::filesystem::path path;
    TempFixtureDir() {
        path = std::filesystem::temp_directory_path() /
               ("bitext_fixture_" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempFixtureDir() { std::filesystem::remove_all(path); }
};

NewsDocument hindi_doc(const std::string& id, const std::string& headline,
                       const std::string& body) {
    NewsDocument doc;
    doc.id = id;
    doc.date = {2017, 12, 1};
    doc.language = Language::Hindi;
    doc.origin = Origin::CrawledHindi;
    doc.headline = headline;
    doc.body = body;
    return doc;
}

}  // namespace

TEST_CASE("enumerate_dates") {
    CHECK(enumerate_dates({2017, 12}, {2017, 12}).size() == 31);
    CHECK(enumerate_dates({2018, 2}, {2018, 2}).size() == 28);
    CHECK(enumerate_dates({2016, 2}, {2016, 2}).size() == 29);  // leap year
    const auto range = enumerate_dates({2017, 12}, {2018, 1});
    CHECK(range.size() == 62);
    CHECK(range.front() == DateStamp{2017, 12, 1});
    CHECK(range.back() == DateStamp{2018, 1, 31});
    CHECK_THROWS_AS(enumerate_dates({2018, 1}, {2017, 12}), std::invalid_argument);
}

TEST_CASE("enumerate_dates length equals sum of month lengths") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> year(2015, 2020), month(1, 12), extra(0, 18);
    for (int iter = 0; iter < 100; ++iter) {
        MonthYear start{year(rng), month(rng)};
        MonthYear end = start;
        for (int k = extra(rng); k > 0; --k) {
            if (++end.month > 12) {
                end.month = 1;
                ++end.year;
            }
        }
        std::size_t expected = 0;
        for (MonthYear my = start; my <= end;) {
            expected += static_cast<std::size_t>(days_in_month(my.year, my.month));
            if (++my.month > 12) {
                my.month = 1;
                ++my.year;
            }
        }
        CHECK(enumerate_dates(start, end).size() == expected);
    }
}

TEST_CASE("date parsing") {
    CHECK(DateStamp::parse_iso("2017-12-31") == DateStamp{2017, 12, 31});
    CHECK_THROWS_AS(DateStamp::parse_iso("2017-02-30"), std::invalid_argument);
    CHECK_THROWS_AS(DateStamp::parse_iso("2017-13-01"), std::invalid_argument);
    CHECK(MonthYear::parse("2017-12") == MonthYear{2017, 12});
    CHECK_THROWS_AS(MonthYear::parse("2017-00"), std::invalid_argument);
    CHECK_THROWS_AS(MonthYear::parse("201712"), std::invalid_argument);
}

TEST_CASE("preprocess") {
    CHECK(preprocess("<p>He  sat.</p>") == "He sat.");
    CHECK(preprocess("plain text") == "plain text");
    CHECK(preprocess("a&amp;b") == "a&b");
    CHECK(preprocess("<script>var x = 1;</script>real") == "real");
    CHECK(preprocess("<style>p { color: red }</style>body text") == "body text");
    CHECK(preprocess("x &#8212; y") == "x \xE2\x80\x94 y");
    CHECK(preprocess("a&nbsp;b") == "a b");
    CHECK(preprocess("  lots \t of\n\nspace  ") == "lots of space");
    CHECK(preprocess("") == "");
    CHECK(preprocess("<div class=\"x\">वह <b>गया</b>।</div>") == "वह गया ।");
}

TEST_CASE("preprocess is idempotent") {
    std::mt19937 rng(5150);
    const std::vector<std::string> pieces = {
        "<p>",  "</p>", "word", "  ",  "<b>more</b>", "टुकड़ा",
        "3.5 ", "\n",   "<div>", "tail"};
    std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
    for (int iter = 0; iter < 200; ++iter) {
        std::string raw;
        for (int k = 0; k < 12; ++k) raw += pieces[pick(rng)];
        const std::string once = preprocess(raw);
        CHECK(preprocess(once) == once);
    }
}

TEST_CASE("fixture providers round-trip") {
    TempFixtureDir dir;
    write_fixture_entry(dir.path, "translations", "वह गया।", "He went.");
    write_fixture_entry(dir.path, "searches", "modi farmers promise",
                        "http://a.example/1\nhttp://a.example/2\nhttp://a.example/3");
    write_fixture_entry(dir.path, "pages", "http://a.example/1", "<p>Body text.</p>");

    const ProviderSet providers = make_fixture_providers(dir.path);
    CHECK(providers.translator->translate("वह गया।") == "He went.");

    const auto links = search_links("modi farmers promise", providers);
    REQUIRE(links.size() == 3);
    CHECK(links[0].url == "http://a.example/1");
    CHECK(links[0].rank == 1);
    CHECK(links[2].rank == 3);

    CHECK(fetch_article(links[0], providers) == "<p>Body text.</p>");
    CHECK_THROWS_AS(fetch_article({"http://missing.example", 1}, providers),
                    MissingFixture);
    CHECK_THROWS_AS(providers.translator->translate("missing key"), MissingFixture);
    CHECK_THROWS_AS(search_links("", providers), std::invalid_argument);
}

TEST_CASE("search_links truncates to ten") {
    TempFixtureDir dir;
    std::string urls;
    for (int i = 1; i <= 12; ++i) {
        urls += "http://x.example/" + std::to_string(i) + "\n";
    }
    write_fixture_entry(dir.path, "searches", "crowded headline", urls);
    const auto links = search_links("crowded headline", make_fixture_providers(dir.path));
    REQUIRE(links.size() == 10);
    CHECK(links.back().url == "http://x.example/10");
}

TEST_CASE("make_fixture_providers rejects missing directory") {
    CHECK_THROWS_AS(make_fixture_providers("/nonexistent/fixture/dir"),
                    std::invalid_argument);
}

TEST_CASE("translate_document") {
    TempFixtureDir dir;
    write_fixture_entry(dir.path, "translations", "शीर्षक", "Headline");
    write_fixture_entry(dir.path, "translations", "वह गया।", "He went.");
    const ProviderSet providers = make_fixture_providers(dir.path);

    const NewsDocument doc = hindi_doc("2017-12-01-nbt-001", "शीर्षक", "वह गया।");
    const NewsDocument out = translate_document(doc, providers);
    CHECK(out.id == doc.id);
    CHECK(out.date == doc.date);
    CHECK(out.language == Language::English);
    CHECK(out.origin == Origin::TranslatedEnglish);
    CHECK(out.headline == "Headline");
    CHECK(out.body == "He went.");

    NewsDocument english = out;
    CHECK_THROWS_AS(translate_document(english, providers), std::invalid_argument);

    TempFixtureDir empty;
    std::filesystem::create_directories(empty.path / "translations");
    CHECK_THROWS_AS(translate_document(doc, make_fixture_providers(empty.path)),
                    MissingFixture);
}

TEST_CASE("select_best_candidate") {
    NewsDocument baseline = hindi_doc("id-1", "Headline", "the minister spoke about farm loans today");
    baseline.language = Language::English;
    baseline.origin = Origin::TranslatedEnglish;

    const CandidateLink link1{"http://a.example/1", 1};
    const CandidateLink link2{"http://a.example/2", 2};

    SUBCASE("highest token_sort_ratio wins") {
        const std::string close = "today the minister spoke about farm loans";
        const std::string far = "cricket scores and weather updates";
        REQUIRE(token_sort_ratio(baseline.body, close) >
                token_sort_ratio(baseline.body, far));
        const auto picked =
            select_best_candidate(baseline, {{link1, far}, {link2, close}});
        REQUIRE(picked.has_value());
        CHECK(picked->body == close);
        CHECK(picked->source_url == link2.url);
        CHECK(picked->id == baseline.id);
        CHECK(picked->origin == Origin::CrawledEnglish);
    }

    SUBCASE("ties break by lowest rank") {
        const std::string same = "identical candidate body";
        const auto picked =
            select_best_candidate(baseline, {{link2, same}, {link1, same}});
        REQUIRE(picked.has_value());
        CHECK(picked->source_url == link1.url);
    }

    SUBCASE("empty candidate list gives none") {
        CHECK_FALSE(select_best_candidate(baseline, {}).has_value());
    }

    SUBCASE("winner is never beaten on re-scoring") {
        std::vector<std::pair<CandidateLink, std::string>> candidates = {
            {link1, "the minister spoke"},
            {link2, "farm loans today spoke minister the about"},
            {{"http://a.example/3", 3}, "completely unrelated words here"}};
        const auto picked = select_best_candidate(baseline, candidates);
        REQUIRE(picked.has_value());
        const int winner = token_sort_ratio(baseline.body, picked->body);
        for (const auto& [link, body] : candidates) {
            CHECK(winner >= token_sort_ratio(baseline.body, body));
        }
    }

    SUBCASE("requires a translated baseline") {
        NewsDocument crawled = baseline;
        crawled.origin = Origin::CrawledEnglish;
        CHECK_THROWS_AS(select_best_candidate(crawled, {}), std::invalid_argument);
    }
}

TEST_CASE("documents jsonl round-trip") {
    const auto path = std::filesystem::temp_directory_path() / "docs_roundtrip.jsonl";
    std::vector<NewsDocument> docs;
    docs.push_back(hindi_doc("2017-12-01-nbt-001", "शीर्षक", "वह गया।"));
    NewsDocument en = docs[0];
    en.language = Language::English;
    en.origin = Origin::CrawledEnglish;
    en.source_url = "http://a.example/1";
    en.headline = "Headline";
    en.body = "He went.";
    docs.push_back(en);

    write_documents_jsonl(path, docs);
    const auto back = read_documents_jsonl(path);
    REQUIRE(back.size() == 2);
    CHECK(back[0].id == docs[0].id);
    CHECK(back[0].body == docs[0].body);
    CHECK(back[0].language == Language::Hindi);
    CHECK(back[1].origin == Origin::CrawledEnglish);
    CHECK(back[1].source_url == "http://a.example/1");
    std::filesystem::remove(path);
}
