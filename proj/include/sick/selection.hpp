#ifndef SICK_SELECTION_HPP
#define SICK_SELECTION_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sick/backends.hpp"
#include "sick/knowledge.hpp"

namespace sick {

enum class Strategy { similarity, nli, random };

std::string strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name);

// score(source, candidate) in [-1, 1], deterministic given construction.
class Scorer {
public:
    virtual ~Scorer() = default;
    virtual Strategy kind() const = 0;
    virtual double score(const std::string& source, const std::string& candidate) = 0;
};

// Cosine of two sentence embeddings, clamped to [-1, 1].
double similarity_score(SentenceEmbedder& embedder, const std::string& a, const std::string& b);

// P(entail) - P(contradict). Rejects distributions that fail to sum to
// 1 +/- 1e-6 or leave [0, 1].
double nli_score(NliBackend& nli, const std::string& premise, const std::string& hypothesis);

class SimilarityScorer : public Scorer {
public:
    explicit SimilarityScorer(std::shared_ptr<SentenceEmbedder> embedder)
        : embedder_(std::move(embedder)) {}
    Strategy kind() const override { return Strategy::similarity; }
    double score(const std::string& source, const std::string& candidate) override {
        return similarity_score(*embedder_, source, candidate);
    }

private:
    std::shared_ptr<SentenceEmbedder> embedder_;
};

// Premise = source sentence, hypothesis = candidate inference.
class NliScorer : public Scorer {
public:
    explicit NliScorer(std::shared_ptr<NliBackend> nli) : nli_(std::move(nli)) {}
    Strategy kind() const override { return Strategy::nli; }
    double score(const std::string& source, const std::string& candidate) override {
        return nli_score(*nli_, source, candidate);
    }

private:
    std::shared_ptr<NliBackend> nli_;
};

// Hash-based pseudo-random score of (seed, source, candidate). Selecting the
// argmax of these scores draws uniformly over the candidate set, is a pure
// function (safe to fan out), and reproduces exactly per seed.
class RandomScorer : public Scorer {
public:
    explicit RandomScorer(std::uint64_t seed) : seed_(seed) {}
    Strategy kind() const override { return Strategy::random; }
    double score(const std::string& source, const std::string& candidate) override;

private:
    std::uint64_t seed_;
};

struct SelectedCommonsense {
    std::size_t source_index = 0;
    CandidateInference chosen;
    double score = 0.0;
    Strategy strategy = Strategy::similarity;
};

// Argmax-scored candidate; ties break on (position in `catalog`, then rank).
// Throws EmptyCandidateSet.
SelectedCommonsense select(const CandidateSet& candidates, const std::string& source_text,
                           Scorer& scorer, const std::vector<std::string>& catalog);

// One selection per source unit, aligned and ordered. `source_texts` are the
// texts the scorer sees (formatted utterances, or summary sentences) and
// never include the other side of the task. Throws LengthMismatch.
std::vector<SelectedCommonsense> select_all(const std::vector<std::string>& source_texts,
                                            const std::vector<CandidateSet>& candidate_sets,
                                            Scorer& scorer,
                                            const std::vector<std::string>& catalog);

} // namespace sick

#endif // SICK_SELECTION_HPP
