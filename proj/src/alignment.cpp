#include "bitext/alignment.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_map>

#include <json.hpp>

#include "bitext/string_metrics.hpp"

namespace bitext {

namespace {

std::unordered_map<std::string, const NewsDocument*> index_by_id(
    const std::vector<NewsDocument>& docs, const char* stream) {
    std::unordered_map<std::string, const NewsDocument*> index;
    for (const NewsDocument& doc : docs) {
        if (!index.emplace(doc.id, &doc).second) {
            throw std::runtime_error(std::string("duplicate document id in ") +
                                     stream + " stream: " + doc.id);
        }
    }
    return index;
}

}  // namespace

std::vector<DocumentTriple> align_documents(const std::vector<NewsDocument>& hindi,
                                            const std::vector<NewsDocument>& translated,
                                            const std::vector<NewsDocument>& english,
                                            AlignStats* stats) {
    index_by_id(hindi, "hindi");  // duplicate check only
    const auto translated_by_id = index_by_id(translated, "translated");
    const auto english_by_id = index_by_id(english, "english");

    AlignStats local;
    std::vector<DocumentTriple> triples;
    for (const NewsDocument& h : hindi) {
        const auto t = translated_by_id.find(h.id);
        if (t == translated_by_id.end()) {
            ++local.missing_translation;
            continue;
        }
        const auto e = english_by_id.find(h.id);
        if (e == english_by_id.end()) {
            ++local.missing_english;
            continue;
        }
        triples.push_back({h, *t->second, *e->second});
    }
    std::sort(triples.begin(), triples.end(), [](const auto& a, const auto& b) {
        return std::tie(a.hindi.date, a.hindi.id) < std::tie(b.hindi.date, b.hindi.id);
    });
    if (stats) *stats = local;
    return triples;
}

std::vector<SentencePair> mine_pairs(const DocumentTriple& triple, int threshold,
                                     const SegmenterRules& rules, MineStats* stats) {
    const auto hindi_sents = sentence_texts(
        triple.hindi.body, split_sentences(triple.hindi.body, Language::Hindi, rules));
    const auto translated_sents = sentence_texts(
        triple.translated.body,
        split_sentences(triple.translated.body, Language::English, rules));
    const auto english_sents = sentence_texts(
        triple.english.body,
        split_sentences(triple.english.body, Language::English, rules));

    const std::size_t paired = std::min(hindi_sents.size(), translated_sents.size());
    if (stats) {
        stats->surplus_hindi_sentences += hindi_sents.size() - paired;
        stats->surplus_translated_sentences += translated_sents.size() - paired;
    }

    std::vector<SentencePair> pairs;
    for (std::size_t i = 0; i < paired; ++i) {
        int best_score = -1;
        std::size_t best_j = 0;
        for (std::size_t j = 0; j < english_sents.size(); ++j) {
            const int score = simple_ratio(translated_sents[i], english_sents[j]);
            if (score > best_score) {  // ties keep the smallest j
                best_score = score;
                best_j = j;
            }
        }
        if (best_score >= threshold && best_score >= 0) {
            pairs.push_back({hindi_sents[i], english_sents[best_j], translated_sents[i],
                             best_score, triple.hindi.date, triple.hindi.id});
        }
    }
    return pairs;
}

std::map<int, std::vector<SentencePair>> build_corpus(
    const std::vector<DocumentTriple>& triples, const std::vector<int>& thresholds,
    const SegmenterRules& rules, MineStats* stats) {
    std::vector<const DocumentTriple*> ordered;
    ordered.reserve(triples.size());
    for (const DocumentTriple& t : triples) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
        return std::tie(a->hindi.date, a->hindi.id) < std::tie(b->hindi.date, b->hindi.id);
    });

    std::map<int, std::vector<SentencePair>> corpus;
    for (std::size_t ti = 0; ti < thresholds.size(); ++ti) {
        const int threshold = thresholds[ti];
        auto& pairs = corpus[threshold];
        for (const DocumentTriple* triple : ordered) {
            // count sentence surplus once, not once per threshold
            MineStats* s = ti == 0 ? stats : nullptr;
            auto mined = mine_pairs(*triple, threshold, rules, s);
            pairs.insert(pairs.end(), std::make_move_iterator(mined.begin()),
                         std::make_move_iterator(mined.end()));
        }
    }
    return corpus;
}

void write_pairs_jsonl(const std::filesystem::path& file,
                       const std::vector<SentencePair>& pairs) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write corpus file: " + file.string());
    for (const SentencePair& p : pairs) {
        nlohmann::json j{{"date", p.date.iso()},   {"doc_id", p.doc_id},
                         {"hi", p.hindi_sentence}, {"en", p.english_sentence},
                         {"baseline", p.baseline_sentence}, {"score", p.score}};
        out << j.dump() << '\n';
    }
}

std::vector<SentencePair> read_pairs_jsonl(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open corpus file: " + file.string());
    std::vector<SentencePair> pairs;
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
        SentencePair p;
        p.date = DateStamp::parse_iso(j.at("date").get<std::string>());
        p.doc_id = j.at("doc_id").get<std::string>();
        p.hindi_sentence = j.at("hi").get<std::string>();
        p.english_sentence = j.at("en").get<std::string>();
        p.baseline_sentence = j.at("baseline").get<std::string>();
        p.score = j.at("score").get<int>();
        pairs.push_back(std::move(p));
    }
    return pairs;
}

void write_pairs_text(const std::filesystem::path& file,
                      const std::vector<SentencePair>& pairs) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write corpus dump: " + file.string());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out << '\n';
        out << pairs[i].hindi_sentence << " ----- " << pairs[i].english_sentence << '\n';
    }
}

}  // namespace bitext
