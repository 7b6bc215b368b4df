#include "sick/backends.hpp"

#include <json.hpp>

#define CPPHTTPLIB_NO_EXCEPTIONS
#include <httplib.h>

#include "sick/errors.hpp"
#include "sick/text.hpp"

namespace sick {

std::size_t BagOfWordsEmbedder::dimension_of(const std::string& word) const {
    return static_cast<std::size_t>(fnv1a(lowercase(word)) % dim_);
}

std::vector<double> BagOfWordsEmbedder::embed(const std::string& text) {
    std::vector<double> vec(dim_, 0.0);
    for (const auto& word : whitespace_split(text)) vec[dimension_of(word)] += 1.0;
    return vec;
}

std::vector<std::vector<double>> OneHotTokenEmbedder::embed_tokens(
    const std::vector<std::string>& tokens) {
    std::vector<std::vector<double>> out;
    out.reserve(tokens.size());
    for (const auto& tok : tokens) {
        auto [it, inserted] = index_.emplace(tok, index_.size());
        if (it->second >= max_dim_)
            throw SickError("one-hot embedder vocabulary exceeded " + std::to_string(max_dim_));
        std::vector<double> v(max_dim_, 0.0);
        v[it->second] = 1.0;
        out.push_back(std::move(v));
    }
    return out;
}

std::array<double, 3> OverlapNliBackend::classify(const std::string& premise,
                                                  const std::string& hypothesis) {
    const auto premise_words = whitespace_split(lowercase(premise));
    const auto hyp_words = whitespace_split(lowercase(hypothesis));
    if (hyp_words.empty()) return {0.0, 1.0, 0.0};

    std::size_t overlap = 0;
    for (const auto& w : hyp_words)
        for (const auto& p : premise_words)
            if (w == p) { ++overlap; break; }

    const double frac = static_cast<double>(overlap) / static_cast<double>(hyp_words.size());
    const double entail = 0.1 + 0.8 * frac;
    const double contradict = 0.1 + 0.1 * (1.0 - frac);
    return {entail, 1.0 - entail - contradict, contradict};
}

struct HttpScoringClient::Impl {
    std::string host;
    httplib::Client client;
    explicit Impl(const std::string& endpoint) : host(endpoint), client(endpoint) {
        client.set_connection_timeout(5);
        client.set_read_timeout(60);
    }

    nlohmann::json post(const std::string& path, const nlohmann::json& req) {
        auto res = client.Post(path, req.dump(), "application/json");
        if (!res)
            throw BackendUnavailableError(host + path + " (" + httplib::to_string(res.error()) + ")");
        if (res->status != 200)
            throw BackendUnavailableError(host + path + " returned status " +
                                          std::to_string(res->status));
        nlohmann::json body = nlohmann::json::parse(res->body, nullptr, false);
        if (body.is_discarded())
            throw BackendUnavailableError(host + path + " returned unparseable body");
        return body;
    }
};

HttpScoringClient::HttpScoringClient(std::string endpoint)
    : impl_(std::make_unique<Impl>(endpoint)) {}

HttpScoringClient::~HttpScoringClient() = default;

std::vector<double> HttpScoringClient::embed(const std::string& text) {
    nlohmann::json body = impl_->post("/embed", {{"texts", {text}}});
    auto vectors = body.at("vectors").get<std::vector<std::vector<double>>>();
    if (vectors.size() != 1)
        throw BackendUnavailableError(impl_->host + "/embed returned wrong vector count");
    return vectors[0];
}

std::vector<std::vector<double>> HttpScoringClient::embed_tokens(
    const std::vector<std::string>& tokens) {
    nlohmann::json body = impl_->post("/embed_tokens", {{"tokens", tokens}});
    auto vectors = body.at("vectors").get<std::vector<std::vector<double>>>();
    if (vectors.size() != tokens.size())
        throw BackendUnavailableError(impl_->host + "/embed_tokens returned wrong vector count");
    return vectors;
}

std::array<double, 3> HttpScoringClient::classify(const std::string& premise,
                                                  const std::string& hypothesis) {
    nlohmann::json body =
        impl_->post("/nli", {{"premise", premise}, {"hypothesis", hypothesis}});
    return {body.at("entail").get<double>(), body.at("neutral").get<double>(),
            body.at("contradict").get<double>()};
}

} // namespace sick
