#include "sick/knowledge.hpp"

#include <json.hpp>

#define CPPHTTPLIB_NO_EXCEPTIONS
#include <httplib.h>

#include "sick/cache.hpp"
#include "sick/errors.hpp"
#include "sick/text.hpp"

namespace sick {

BackendProfile comet_sentence_profile() {
    BackendProfile p;
    p.id = "comet-sentence";
    p.context = ContextMode::per_sentence;
    p.catalog = {"HinderedBy", "xWant", "xIntent", "xNeed", "xReason"};
    p.beams_requested = 5;
    p.beams_kept = 5;
    return p;
}

BackendProfile paracomet_history_profile() {
    BackendProfile p;
    p.id = "paracomet-history";
    p.context = ContextMode::history_conditioned;
    p.catalog = {"xIntent", "xWant", "xReact", "xEffect", "xAttr"};
    p.beams_requested = 10;
    p.beams_kept = 5;
    return p;
}

BackendProfile mock_profile(ContextMode context) {
    BackendProfile p = context == ContextMode::per_sentence ? comet_sentence_profile()
                                                            : paracomet_history_profile();
    p.id = context == ContextMode::per_sentence ? "mock" : "mock-history";
    return p;
}

MockKnowledgeBackend::MockKnowledgeBackend(BackendProfile profile,
                                           std::vector<MockFixture> fixtures)
    : profile_(std::move(profile)), fixtures_(std::move(fixtures)) {}

std::vector<std::string> MockKnowledgeBackend::generate(
    const std::vector<std::string>& context, std::size_t target_index,
    const std::string& relation, int beams) {
    ++calls_;
    if (target_index >= context.size())
        throw BackendMalformedOutputError(relation);

    std::uint64_t h = fnv1a(relation);
    for (const auto& line : context) h = fnv1a(line, h);
    const std::string tag = hex64(h).substr(8);   // 8 hex chars is plenty for toy corpora

    std::vector<std::string> texts;
    texts.reserve(static_cast<std::size_t>(beams));
    const std::string& target = context[target_index];
    for (const auto& fixture : fixtures_) {
        if (fixture.relation == relation && target.find(fixture.trigger) != std::string::npos) {
            for (const auto& t : fixture.texts)
                if (texts.size() < static_cast<std::size_t>(beams)) texts.push_back(t);
            break;
        }
    }
    while (texts.size() < static_cast<std::size_t>(beams))
        texts.push_back("mock:" + relation + ":" + std::to_string(texts.size()) + ":" + tag);
    return texts;
}

struct HttpKnowledgeBackend::Impl {
    std::string host;
    httplib::Client client;
    explicit Impl(const std::string& endpoint) : host(endpoint), client(endpoint) {
        client.set_connection_timeout(5);
        client.set_read_timeout(60);
    }
};

HttpKnowledgeBackend::HttpKnowledgeBackend(std::string endpoint, BackendProfile profile)
    : impl_(std::make_unique<Impl>(endpoint)), profile_(std::move(profile)) {}

HttpKnowledgeBackend::~HttpKnowledgeBackend() = default;

std::vector<std::string> HttpKnowledgeBackend::generate(
    const std::vector<std::string>& context, std::size_t target_index,
    const std::string& relation, int beams) {
    ++calls_;
    nlohmann::json req;
    req["context"] = context;
    req["target_index"] = target_index;
    req["relation"] = relation;
    req["beams"] = beams;

    auto res = impl_->client.Post("/generate", req.dump(), "application/json");
    if (!res)
        throw BackendUnavailableError(impl_->host + " (" + httplib::to_string(res.error()) + ")");
    if (res->status != 200)
        throw BackendUnavailableError(impl_->host + " returned status " +
                                      std::to_string(res->status));
    nlohmann::json body = nlohmann::json::parse(res->body, nullptr, false);
    if (body.is_discarded() || !body.contains("texts") || !body["texts"].is_array())
        throw BackendMalformedOutputError(relation);
    return body["texts"].get<std::vector<std::string>>();
}

namespace {

// Fetch-or-generate for one (source, relation); truncates to beams_kept and
// validates the cardinality/emptiness contract.
std::vector<CandidateInference> ranked_candidates(KnowledgeBackend& backend,
                                                  const std::vector<std::string>& context,
                                                  std::size_t target_index,
                                                  const std::string& relation,
                                                  const std::string& source_id,
                                                  std::size_t source_index,
                                                  InferenceCache* cache) {
    const BackendProfile& profile = backend.profile();
    std::vector<std::string> texts;

    InferenceCache::Key key{profile.id, source_id, source_index, relation};
    if (cache != nullptr) {
        if (const auto* hit = cache->lookup(key)) texts = *hit;
    }
    if (texts.empty()) {
        texts = backend.generate(context, target_index, relation, profile.beams_requested);
        if (cache != nullptr) cache->append(key, texts);
    }

    if (texts.size() < static_cast<std::size_t>(profile.beams_kept))
        throw BackendMalformedOutputError(relation);

    std::vector<CandidateInference> out;
    out.reserve(static_cast<std::size_t>(profile.beams_kept));
    for (int rank = 0; rank < profile.beams_kept; ++rank) {
        CandidateInference c;
        c.relation = relation;
        c.rank = rank;
        c.text = normalize_whitespace(texts[static_cast<std::size_t>(rank)]);
        if (c.text.empty()) throw BackendMalformedOutputError(relation);
        out.push_back(std::move(c));
    }
    return out;
}

CandidateSet candidate_set_for(KnowledgeBackend& backend,
                               const std::vector<std::string>& context,
                               std::size_t target_index, const std::string& source_id,
                               std::size_t source_index, InferenceCache* cache) {
    CandidateSet set;
    set.source_index = source_index;
    for (const auto& relation : backend.profile().catalog) {
        auto ranked = ranked_candidates(backend, context, target_index, relation,
                                        source_id, source_index, cache);
        set.candidates.insert(set.candidates.end(), ranked.begin(), ranked.end());
    }
    return set;
}

} // namespace

std::vector<CandidateSet> generate_input_candidates(KnowledgeBackend& backend,
                                                    const Dialogue& dialogue,
                                                    InferenceCache* cache) {
    const BackendProfile& profile = backend.profile();
    std::vector<CandidateSet> sets;
    sets.reserve(dialogue.size());
    for (std::size_t i = 0; i < dialogue.size(); ++i) {
        std::vector<std::string> context;
        std::size_t target_index = 0;
        if (profile.context == ContextMode::history_conditioned) {
            for (std::size_t j = 0; j <= i; ++j)
                context.push_back(dialogue.utterances[j].formatted());
            target_index = i;
        } else {
            context.push_back(dialogue.utterances[i].formatted());
        }
        sets.push_back(candidate_set_for(backend, context, target_index,
                                         dialogue.id, i, cache));
    }
    return sets;
}

std::vector<CandidateSet> generate_target_candidates(KnowledgeBackend& backend,
                                                     const SummaryDoc& summary,
                                                     const std::string& source_id,
                                                     InferenceCache* cache) {
    const BackendProfile& profile = backend.profile();
    std::vector<CandidateSet> sets;
    sets.reserve(summary.size());
    for (std::size_t i = 0; i < summary.size(); ++i) {
        std::vector<std::string> context;
        std::size_t target_index = 0;
        if (profile.context == ContextMode::history_conditioned) {
            context.assign(summary.sentences.begin(),
                           summary.sentences.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            target_index = i;
        } else {
            context.push_back(summary.sentences[i]);
        }
        sets.push_back(candidate_set_for(backend, context, target_index,
                                         source_id, i, cache));
    }
    return sets;
}

} // namespace sick
