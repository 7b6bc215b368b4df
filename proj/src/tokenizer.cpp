#include "sick/tokenizer.hpp"

#include <fstream>

#include <json.hpp>

#include "sick/errors.hpp"
#include "sick/text.hpp"

namespace sick {

WhitespaceTokenizer::WhitespaceTokenizer() {
    // Slots 0..5 are pinned to the special ids.
    id_to_word_ = {"<pad>", "<s>", "</s>", "<unk>", kOpenMarker, kCloseMarker};
    for (std::size_t i = 0; i < id_to_word_.size(); ++i)
        word_to_id_[id_to_word_[i]] = static_cast<int>(i);
}

WhitespaceTokenizer::WhitespaceTokenizer(const std::vector<std::string>& words)
    : WhitespaceTokenizer() {
    for (const auto& w : words) add_word(w);
}

int WhitespaceTokenizer::add_word(const std::string& word) {
    auto it = word_to_id_.find(word);
    if (it != word_to_id_.end()) return it->second;
    int id = static_cast<int>(id_to_word_.size());
    id_to_word_.push_back(word);
    word_to_id_[word] = id;
    return id;
}

void WhitespaceTokenizer::fit(std::string_view text) {
    if (frozen_) return;
    for (const auto& w : whitespace_split(text)) add_word(w);
}

std::vector<int> WhitespaceTokenizer::encode(std::string_view text) const {
    std::vector<int> ids;
    for (const auto& w : whitespace_split(text)) {
        auto it = word_to_id_.find(w);
        if (it != word_to_id_.end()) {
            ids.push_back(it->second);
        } else if (frozen_) {
            ids.push_back(specials_.unk);
        } else {
            // Growth through encode keeps single-pass pipelines simple.
            auto* self = const_cast<WhitespaceTokenizer*>(this);
            ids.push_back(self->add_word(w));
        }
    }
    return ids;
}

std::string WhitespaceTokenizer::decode(std::span<const int> ids) const {
    std::vector<std::string> words;
    words.reserve(ids.size());
    for (int id : ids) {
        if (id == specials_.pad) continue;
        if (id < 0 || id >= vocab_size())
            throw SickError("token id out of range: " + std::to_string(id));
        words.push_back(id_to_word_[static_cast<std::size_t>(id)]);
    }
    return join(words, " ");
}

void WhitespaceTokenizer::save(const std::string& path) const {
    nlohmann::json j;
    j["words"] = std::vector<std::string>(id_to_word_.begin() + 6, id_to_word_.end());
    std::ofstream out(path);
    if (!out) throw SickError("cannot write tokenizer file: " + path);
    out << j.dump() << "\n";
}

WhitespaceTokenizer WhitespaceTokenizer::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileMissingError(path);
    nlohmann::json j;
    in >> j;
    WhitespaceTokenizer tok(j.at("words").get<std::vector<std::string>>());
    tok.freeze();
    return tok;
}

} // namespace sick
