#ifndef SICK_KNOWLEDGE_HPP
#define SICK_KNOWLEDGE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sick/corpus.hpp"

namespace sick {

class InferenceCache;

enum class ContextMode {
    per_sentence,        // backend sees only the target sentence
    history_conditioned, // backend sees utterances 1..i when generating for u_i
};

// A backend profile fixes the relation catalog and decoding widths. Both
// default profiles keep exactly catalog_size x beams_kept = 25 candidates
// per source sentence.
struct BackendProfile {
    std::string id;                    // e.g. "comet-sentence", "mock"
    ContextMode context = ContextMode::per_sentence;
    std::vector<std::string> catalog;  // ordered relation catalog (ties break on this order)
    int beams_requested = 5;           // beam width asked of the backend
    int beams_kept = 5;                // ranks kept per relation after truncation

    std::size_t candidates_per_source() const {
        return catalog.size() * static_cast<std::size_t>(beams_kept);
    }
};

// Per-sentence profile (event-centered + social relations, beam 5).
BackendProfile comet_sentence_profile();
// History-conditioned profile (social relations, beam 10 truncated to top 5).
BackendProfile paracomet_history_profile();
// Deterministic in-process profile used by tests and the mock pipeline.
BackendProfile mock_profile(ContextMode context = ContextMode::per_sentence);

struct CandidateInference {
    std::string relation;
    int rank = 0;          // beam rank, 0-based, < beams_kept
    std::string text;
};

struct CandidateSet {
    std::size_t source_index = 0;  // utterance or summary-sentence index
    std::vector<CandidateInference> candidates;
};

// Narrow generation contract shared by the HTTP client and the mock:
// (context lines, target index, relation, beams) -> ranked texts.
class KnowledgeBackend {
public:
    virtual ~KnowledgeBackend() = default;

    virtual const BackendProfile& profile() const = 0;
    virtual std::vector<std::string> generate(const std::vector<std::string>& context,
                                              std::size_t target_index,
                                              const std::string& relation,
                                              int beams) = 0;

    std::size_t calls() const { return calls_; }
    void reset_calls() { calls_ = 0; }

protected:
    std::size_t calls_ = 0;
};

// Fixture entry for the mock backend: when the target sentence contains
// `trigger`, `texts` fill the top ranks for `relation`.
struct MockFixture {
    std::string trigger;
    std::string relation;
    std::vector<std::string> texts;
};

// Pure function of (context hash, relation, rank); candidate texts look like
// "mock:<relation>:<rank>:<hash>". Fixtures let tests pin specific outputs.
class MockKnowledgeBackend : public KnowledgeBackend {
public:
    explicit MockKnowledgeBackend(BackendProfile profile = mock_profile(),
                                  std::vector<MockFixture> fixtures = {});

    const BackendProfile& profile() const override { return profile_; }
    std::vector<std::string> generate(const std::vector<std::string>& context,
                                      std::size_t target_index,
                                      const std::string& relation,
                                      int beams) override;

private:
    BackendProfile profile_;
    std::vector<MockFixture> fixtures_;
};

// HTTP client for out-of-process knowledge models. POSTs the wire contract
// {"context": [...], "target_index": i, "relation": r, "beams": b} to
// <endpoint>/generate and expects {"texts": [...]} ordered by rank.
class HttpKnowledgeBackend : public KnowledgeBackend {
public:
    HttpKnowledgeBackend(std::string endpoint, BackendProfile profile);
    ~HttpKnowledgeBackend() override;

    const BackendProfile& profile() const override { return profile_; }
    std::vector<std::string> generate(const std::vector<std::string>& context,
                                      std::size_t target_index,
                                      const std::string& relation,
                                      int beams) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    BackendProfile profile_;
};

// One CandidateSet per utterance. Context per profile: the single formatted
// utterance, or the formatted history 1..i. Results pass through `cache`
// when provided; cache keys are (profile id, source id, index, relation).
std::vector<CandidateSet> generate_input_candidates(KnowledgeBackend& backend,
                                                    const Dialogue& dialogue,
                                                    InferenceCache* cache = nullptr);

// One CandidateSet per summary sentence; `source_id` distinguishes summary
// entries from dialogue entries in the shared cache.
std::vector<CandidateSet> generate_target_candidates(KnowledgeBackend& backend,
                                                     const SummaryDoc& summary,
                                                     const std::string& source_id,
                                                     InferenceCache* cache = nullptr);

} // namespace sick

#endif // SICK_KNOWLEDGE_HPP
