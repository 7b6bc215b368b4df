#include "sick/corpus.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "sick/errors.hpp"
#include "sick/text.hpp"
#include "sick/tokenizer.hpp"

namespace sick {

namespace {

const std::unordered_set<std::string>& abbreviation_stoplist() {
    static const std::unordered_set<std::string> list = {
        "mr.", "mrs.", "ms.", "dr.", "prof.", "sr.", "jr.", "st.",
        "vs.", "etc.", "e.g.", "i.e.", "no.", "u.s.", "a.m.", "p.m.",
    };
    return list;
}

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_closing_quote(char c) {
    return c == '"' || c == '\'' || c == ')' || c == ']';
}

bool starts_new_sentence(char c) {
    return std::isupper(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c)) ||
           c == '"' || c == '\'' || c == '(';
}

// Word ending at position `end` (inclusive of the period), lowercased.
std::string trailing_word(const std::string& text, std::size_t end) {
    std::size_t start = end;
    while (start > 0 && !std::isspace(static_cast<unsigned char>(text[start - 1]))) --start;
    return lowercase(std::string_view(text).substr(start, end - start + 1));
}

Utterance make_utterance(std::size_t index, const std::string& speaker,
                         const std::string& text, const std::string& record_id) {
    Utterance u;
    u.index = index;
    u.speaker = normalize_whitespace(speaker);
    u.text = normalize_whitespace(text);
    if (u.speaker.empty()) throw SchemaViolationError(record_id, "dialogue[].speaker");
    if (u.text.empty()) throw SchemaViolationError(record_id, "dialogue[].text");
    return u;
}

CorpusExample make_example(const std::string& id, std::vector<Utterance> utterances,
                           const std::string& summary_raw) {
    if (utterances.empty()) throw SchemaViolationError(id, "dialogue");
    CorpusExample ex;
    ex.dialogue.id = id;
    ex.dialogue.utterances = std::move(utterances);
    try {
        ex.summary = split_summary_sentences(summary_raw);
    } catch (const EmptySummaryError&) {
        throw SchemaViolationError(id, "summary");
    }
    return ex;
}

} // namespace

SummaryDoc split_summary_sentences(const std::string& raw) {
    const std::string text = normalize_whitespace(raw);
    if (text.empty()) throw EmptySummaryError();

    SummaryDoc doc;
    doc.raw = raw;

    std::size_t start = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_terminal(text[i])) {
            if (text[i] == '.' &&
                abbreviation_stoplist().count(trailing_word(text, i)) > 0) {
                ++i;
                continue;
            }
            std::size_t end = i;
            while (end + 1 < text.size() && is_closing_quote(text[end + 1])) ++end;
            // Boundary only before whitespace followed by a sentence opener.
            if (end + 1 < text.size() && text[end + 1] == ' ' &&
                end + 2 < text.size() && starts_new_sentence(text[end + 2])) {
                doc.sentences.push_back(text.substr(start, end + 1 - start));
                start = end + 2;
                i = start;
                continue;
            }
            i = end + 1;
            continue;
        }
        ++i;
    }
    if (start < text.size()) doc.sentences.push_back(text.substr(start));
    if (doc.sentences.empty()) doc.sentences.push_back(text);
    return doc;
}

Corpus load_corpus(const std::string& path, const std::string& schema,
                   const std::string& name, const std::string& split) {
    if (schema != "jsonl-v1")
        throw ConfigInvalidError("schema (expected jsonl-v1, got " + schema + ")");
    std::ifstream in(path);
    if (!in) throw FileMissingError(path);

    Corpus corpus;
    corpus.name = name;
    corpus.split = split;
    std::unordered_set<std::string> seen_ids;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (normalize_whitespace(line).empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
            throw SchemaViolationError("line " + std::to_string(line_no), "<json>");
        }
        if (!rec.contains("id") || !rec["id"].is_string())
            throw SchemaViolationError("line " + std::to_string(line_no), "id");
        const std::string id = rec["id"].get<std::string>();
        if (!seen_ids.insert(id).second) throw DuplicateIdError(id);
        if (!rec.contains("dialogue") || !rec["dialogue"].is_array())
            throw SchemaViolationError(id, "dialogue");
        if (!rec.contains("summary") || !rec["summary"].is_string())
            throw SchemaViolationError(id, "summary");

        std::vector<Utterance> utterances;
        for (const auto& turn : rec["dialogue"]) {
            if (!turn.is_object() || !turn.contains("speaker") || !turn.contains("text") ||
                !turn["speaker"].is_string() || !turn["text"].is_string())
                throw SchemaViolationError(id, "dialogue[]");
            utterances.push_back(make_utterance(utterances.size(),
                                                turn["speaker"].get<std::string>(),
                                                turn["text"].get<std::string>(), id));
        }
        corpus.examples.push_back(
            make_example(id, std::move(utterances), rec["summary"].get<std::string>()));
    }
    return corpus;
}

Corpus load_samsum_native(const std::string& path, const std::string& name,
                          const std::string& split) {
    std::ifstream in(path);
    if (!in) throw FileMissingError(path);
    nlohmann::json arr;
    try {
        in >> arr;
    } catch (const nlohmann::json::parse_error&) {
        throw SchemaViolationError(path, "<json>");
    }
    if (!arr.is_array()) throw SchemaViolationError(path, "<root array>");

    Corpus corpus;
    corpus.name = name;
    corpus.split = split;
    std::unordered_set<std::string> seen_ids;
    for (const auto& rec : arr) {
        if (!rec.contains("id") || !rec.contains("dialogue") || !rec.contains("summary"))
            throw SchemaViolationError(rec.value("id", "<missing>"), "id/dialogue/summary");
        const std::string id = rec["id"].is_string()
                                   ? rec["id"].get<std::string>()
                                   : std::to_string(rec["id"].get<long long>());
        if (!seen_ids.insert(id).second) throw DuplicateIdError(id);

        std::vector<Utterance> utterances;
        std::string raw = rec["dialogue"].get<std::string>();
        std::string line;
        for (std::size_t i = 0; i <= raw.size(); ++i) {
            if (i == raw.size() || raw[i] == '\n' || raw[i] == '\r') {
                const std::string norm = normalize_whitespace(line);
                line.clear();
                if (norm.empty()) continue;
                const std::size_t colon = norm.find(':');
                std::string speaker = colon == std::string::npos ? "Speaker"
                                                                 : norm.substr(0, colon);
                std::string text = colon == std::string::npos ? norm
                                                              : norm.substr(colon + 1);
                text = normalize_whitespace(text);
                if (text.empty()) continue;   // speaker line with no content
                utterances.push_back(make_utterance(utterances.size(), speaker, text, id));
            } else {
                line.push_back(raw[i]);
            }
        }
        corpus.examples.push_back(
            make_example(id, std::move(utterances), rec["summary"].get<std::string>()));
    }
    return corpus;
}

Corpus load_dialogsum_native(const std::string& path, const std::string& name,
                             const std::string& split) {
    std::ifstream in(path);
    if (!in) throw FileMissingError(path);

    Corpus corpus;
    corpus.name = name;
    corpus.split = split;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (normalize_whitespace(line).empty()) continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
            throw SchemaViolationError("line " + std::to_string(line_no), "<json>");
        }
        const std::string id = rec.contains("fname") ? rec["fname"].get<std::string>()
                                                     : rec.value("id", "");
        if (id.empty()) throw SchemaViolationError("line " + std::to_string(line_no), "fname");
        if (!seen_ids.insert(id).second) throw DuplicateIdError(id);
        // DialogSum uses "summary" for train/dev and "summary1..3" for test;
        // the first annotation is taken as the reference.
        std::string summary = rec.value("summary", rec.value("summary1", ""));
        if (summary.empty()) throw SchemaViolationError(id, "summary");

        std::vector<Utterance> utterances;
        std::string raw = rec["dialogue"].get<std::string>();
        std::string turn;
        for (std::size_t i = 0; i <= raw.size(); ++i) {
            if (i == raw.size() || raw[i] == '\n' || raw[i] == '\r') {
                const std::string norm = normalize_whitespace(turn);
                turn.clear();
                if (norm.empty()) continue;
                std::string speaker = "Speaker";
                std::string text = norm;
                if (norm.size() > 2 && norm[0] == '#') {
                    const std::size_t close = norm.find("#:", 1);
                    if (close != std::string::npos) {
                        speaker = norm.substr(1, close - 1);
                        text = normalize_whitespace(norm.substr(close + 2));
                    }
                }
                if (text.empty()) continue;
                utterances.push_back(make_utterance(utterances.size(), speaker, text, id));
            } else {
                turn.push_back(raw[i]);
            }
        }
        corpus.examples.push_back(make_example(id, std::move(utterances), summary));
    }
    return corpus;
}

void write_corpus_jsonl(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SickError("cannot write corpus file: " + path);
    for (const auto& ex : corpus.examples) {
        nlohmann::json rec;
        rec["id"] = ex.dialogue.id;
        nlohmann::json turns = nlohmann::json::array();
        for (const auto& u : ex.dialogue.utterances)
            turns.push_back({{"speaker", u.speaker}, {"text", u.text}});
        rec["dialogue"] = std::move(turns);
        rec["summary"] = normalize_whitespace(ex.summary.raw);
        out << rec.dump() << "\n";
    }
}

StatsReport corpus_stats(const Corpus& corpus, const Tokenizer& tokenizer) {
    if (corpus.examples.empty()) throw EmptyCorpusError();

    StatsReport report;
    report.example_count = corpus.examples.size();
    double sum_dialogue_tokens = 0.0;
    double sum_summary_tokens = 0.0;
    double sum_turns = 0.0;
    double sum_speakers = 0.0;
    double sum_ratio = 0.0;

    for (const auto& ex : corpus.examples) {
        std::size_t dialogue_tokens = 0;
        std::unordered_set<std::string> speakers;
        for (const auto& u : ex.dialogue.utterances) {
            dialogue_tokens += tokenizer.encode(u.formatted()).size();
            speakers.insert(u.speaker);
        }
        const std::size_t summary_tokens =
            tokenizer.encode(normalize_whitespace(ex.summary.raw)).size();
        sum_dialogue_tokens += static_cast<double>(dialogue_tokens);
        sum_summary_tokens += static_cast<double>(summary_tokens);
        sum_turns += static_cast<double>(ex.dialogue.size());
        sum_speakers += static_cast<double>(speakers.size());
        sum_ratio += dialogue_tokens > 0
                         ? static_cast<double>(summary_tokens) / static_cast<double>(dialogue_tokens)
                         : 0.0;
    }

    const double n = static_cast<double>(report.example_count);
    report.mean_tokens_per_dialogue = sum_dialogue_tokens / n;
    report.mean_tokens_per_summary = sum_summary_tokens / n;
    report.mean_turns = sum_turns / n;
    report.mean_speakers = sum_speakers / n;
    report.compression_rate = sum_ratio / n;
    return report;
}

} // namespace sick
