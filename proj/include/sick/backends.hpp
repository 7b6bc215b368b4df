#ifndef SICK_BACKENDS_HPP
#define SICK_BACKENDS_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace sick {

// Sentence-level embedding backend used by similarity scoring.
class SentenceEmbedder {
public:
    virtual ~SentenceEmbedder() = default;
    virtual std::vector<double> embed(const std::string& text) = 0;
};

// Token-level embedding backend used by the BERTScore-style metric:
// one vector per token.
class TokenEmbedder {
public:
    virtual ~TokenEmbedder() = default;
    virtual std::vector<std::vector<double>> embed_tokens(const std::vector<std::string>& tokens) = 0;
};

// 3-way entailment backend: (premise, hypothesis) -> (entail, neutral, contradict).
class NliBackend {
public:
    virtual ~NliBackend() = default;
    virtual std::array<double, 3> classify(const std::string& premise,
                                           const std::string& hypothesis) = 0;
};

// Term-count vectorizer over a fixed hash map: dimension = fnv1a(word) % dim.
// Deterministic stand-in for a sentence-transformer service.
class BagOfWordsEmbedder : public SentenceEmbedder {
public:
    explicit BagOfWordsEmbedder(std::size_t dim = 256) : dim_(dim) {}
    std::vector<double> embed(const std::string& text) override;
    std::size_t dimension_of(const std::string& word) const;

private:
    std::size_t dim_;
};

// One-hot token embedder with a first-seen index map, so two tokens share a
// dimension iff they are the same string.
class OneHotTokenEmbedder : public TokenEmbedder {
public:
    explicit OneHotTokenEmbedder(std::size_t max_dim = 4096) : max_dim_(max_dim) {}
    std::vector<std::vector<double>> embed_tokens(const std::vector<std::string>& tokens) override;

private:
    std::size_t max_dim_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Keyword-overlap NLI mock: entailment mass grows with the fraction of
// hypothesis words found in the premise. Deterministic, distribution sums to 1.
class OverlapNliBackend : public NliBackend {
public:
    std::array<double, 3> classify(const std::string& premise,
                                   const std::string& hypothesis) override;
};

// HTTP clients for the out-of-process scoring services. Wire contract
// mirrors the knowledge backend: JSON in, JSON out.
//   POST /embed         {"texts": [s]}            -> {"vectors": [[f]]}
//   POST /embed_tokens  {"tokens": [s]}           -> {"vectors": [[f]]}
//   POST /nli           {"premise": s, "hypothesis": s}
//                       -> {"entail": f, "neutral": f, "contradict": f}
class HttpScoringClient : public SentenceEmbedder, public TokenEmbedder, public NliBackend {
public:
    explicit HttpScoringClient(std::string endpoint);
    ~HttpScoringClient() override;

    std::vector<double> embed(const std::string& text) override;
    std::vector<std::vector<double>> embed_tokens(const std::vector<std::string>& tokens) override;
    std::array<double, 3> classify(const std::string& premise,
                                   const std::string& hypothesis) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace sick

#endif // SICK_BACKENDS_HPP
