#ifndef SICK_CORPUS_HPP
#define SICK_CORPUS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace sick {

class Tokenizer;

struct Utterance {
    std::size_t index = 0;   // 0-based position within the dialogue
    std::string speaker;
    std::string text;        // whitespace-normalized, never contains newlines

    // Rendering used everywhere a speaker-attributed line is needed
    // (model inputs, knowledge-backend contexts, stats).
    std::string formatted() const { return speaker + " : " + text; }
};

struct Dialogue {
    std::string id;
    std::vector<Utterance> utterances;   // n >= 1, indices 0..n-1 in order

    std::size_t size() const { return utterances.size(); }
};

struct SummaryDoc {
    std::vector<std::string> sentences;  // m >= 1, each non-empty
    std::string raw;                     // original summary text

    std::size_t size() const { return sentences.size(); }
};

struct CorpusExample {
    Dialogue dialogue;
    SummaryDoc summary;
};

struct Corpus {
    std::string name;
    std::string split;                   // train / dev / test
    std::vector<CorpusExample> examples;

    std::size_t size() const { return examples.size(); }
};

struct StatsReport {
    std::size_t example_count = 0;
    double mean_tokens_per_dialogue = 0.0;
    double mean_tokens_per_summary = 0.0;
    double mean_turns = 0.0;
    double mean_speakers = 0.0;
    double compression_rate = 0.0;       // mean over examples of summary/dialogue token ratio
};

// Deterministic rule-based sentence segmentation: splits after {., !, ?}
// (plus trailing closing quotes) when followed by whitespace and an
// uppercase letter, digit, or opening quote. Honors an abbreviation
// stop-list. Throws EmptySummaryError when raw normalizes to nothing.
SummaryDoc split_summary_sentences(const std::string& raw);

// Loads the canonical JSONL corpus: one record per line,
// {"id": str, "dialogue": [{"speaker": str, "text": str}], "summary": str}.
// Supported schema tags: "jsonl-v1". Throws FileMissing / SchemaViolation /
// DuplicateId. `name` and `split` label the returned corpus.
Corpus load_corpus(const std::string& path, const std::string& schema,
                   const std::string& name = "", const std::string& split = "");

// Adapters from native dataset release formats to the canonical schema.
// samsum: a JSON array of {"id", "dialogue" (newline-separated "Name: text"), "summary"}.
// dialogsum: JSONL of {"fname", "dialogue" ("#Person1#: text\n..."), "summary"}.
Corpus load_samsum_native(const std::string& path, const std::string& name,
                          const std::string& split);
Corpus load_dialogsum_native(const std::string& path, const std::string& name,
                             const std::string& split);

// Serializes a corpus back to canonical JSONL (used by the ingest stage).
void write_corpus_jsonl(const Corpus& corpus, const std::string& path);

// Token counts use the pipeline tokenizer over the formatted utterances
// ("Name : text") and the raw summary. Throws EmptyCorpusError.
StatsReport corpus_stats(const Corpus& corpus, const Tokenizer& tokenizer);

} // namespace sick

#endif // SICK_CORPUS_HPP
