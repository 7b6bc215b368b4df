#include "sick/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sick/errors.hpp"
#include "sick/text.hpp"

namespace sick {

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::similarity: return "similarity";
        case Strategy::nli: return "nli";
        case Strategy::random: return "random";
    }
    return "similarity";
}

Strategy parse_strategy(const std::string& name) {
    if (name == "similarity") return Strategy::similarity;
    if (name == "nli") return Strategy::nli;
    if (name == "random") return Strategy::random;
    throw ConfigInvalidError("strategy (got " + name + ")");
}

double similarity_score(SentenceEmbedder& embedder, const std::string& a, const std::string& b) {
    const std::vector<double> va = embedder.embed(a);
    const std::vector<double> vb = embedder.embed(b);
    if (va.size() != vb.size())
        throw BackendUnavailableError("embedder returned mismatched dimensions");

    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < va.size(); ++i) {
        dot += va[i] * vb[i];
        na += va[i] * va[i];
        nb += vb[i] * vb[i];
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

double nli_score(NliBackend& nli, const std::string& premise, const std::string& hypothesis) {
    const auto dist = nli.classify(premise, hypothesis);
    double sum = 0.0;
    for (double p : dist) {
        if (p < 0.0 || p > 1.0)
            throw MalformedDistributionError("probability outside [0,1]");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6)
        throw MalformedDistributionError("sums to " + std::to_string(sum));
    return dist[0] - dist[2];
}

double RandomScorer::score(const std::string& source, const std::string& candidate) {
    std::uint64_t h = seed_;
    h = fnv1a(source, h ^ 0x9e3779b97f4a7c15ULL);
    h = fnv1a(candidate, h);
    // Map the top 53 bits onto [-1, 1].
    const double unit = static_cast<double>(h >> 11) / 9007199254740992.0;
    return 2.0 * unit - 1.0;
}

namespace {

std::size_t catalog_position(const std::vector<std::string>& catalog,
                             const std::string& relation) {
    for (std::size_t i = 0; i < catalog.size(); ++i)
        if (catalog[i] == relation) return i;
    return catalog.size();   // unknown relations sort after catalog members
}

} // namespace

SelectedCommonsense select(const CandidateSet& candidates, const std::string& source_text,
                           Scorer& scorer, const std::vector<std::string>& catalog) {
    if (candidates.candidates.empty()) throw EmptyCandidateSetError();

    const CandidateInference* best = nullptr;
    double best_score = -std::numeric_limits<double>::infinity();
    std::size_t best_pos = 0;

    for (const auto& candidate : candidates.candidates) {
        const double s = scorer.score(source_text, candidate.text);
        const std::size_t pos = catalog_position(catalog, candidate.relation);
        const bool wins =
            best == nullptr || s > best_score ||
            (s == best_score && (pos < best_pos ||
                                 (pos == best_pos && candidate.rank < best->rank)));
        if (wins) {
            best = &candidate;
            best_score = s;
            best_pos = pos;
        }
    }

    SelectedCommonsense out;
    out.source_index = candidates.source_index;
    out.chosen = *best;
    out.score = best_score;
    out.strategy = scorer.kind();
    return out;
}

std::vector<SelectedCommonsense> select_all(const std::vector<std::string>& source_texts,
                                            const std::vector<CandidateSet>& candidate_sets,
                                            Scorer& scorer,
                                            const std::vector<std::string>& catalog) {
    if (source_texts.size() != candidate_sets.size())
        throw LengthMismatchError(std::to_string(source_texts.size()) + " source units vs " +
                                  std::to_string(candidate_sets.size()) + " candidate sets");
    std::vector<SelectedCommonsense> out;
    out.reserve(source_texts.size());
    for (std::size_t i = 0; i < source_texts.size(); ++i)
        out.push_back(select(candidate_sets[i], source_texts[i], scorer, catalog));
    return out;
}

} // namespace sick
