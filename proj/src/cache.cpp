#include "sick/cache.hpp"

#include <filesystem>

#include <json.hpp>

#include "sick/errors.hpp"

namespace sick {

std::string InferenceCache::Key::describe() const {
    return profile_id + "/" + source_id + "/" + std::to_string(source_index) + "/" + relation;
}

InferenceCache InferenceCache::open(const std::string& path) {
    InferenceCache cache;
    cache.path_ = path;

    std::size_t valid_bytes = 0;
    if (std::filesystem::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw SickError("cannot open cache file: " + path);
        std::string line;
        std::size_t consumed = 0;
        while (std::getline(in, line)) {
            const bool has_newline = !in.eof();
            const std::size_t record_bytes = line.size() + (has_newline ? 1 : 0);
            if (line.empty()) {
                consumed += record_bytes;
                if (has_newline) valid_bytes = consumed;
                continue;
            }
            nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
            const bool parses = !rec.is_discarded() && rec.contains("profile") &&
                                rec.contains("source_id") && rec.contains("source_index") &&
                                rec.contains("relation") && rec.contains("texts");
            if (!parses || !has_newline) {
                if (!parses && has_newline) {
                    // A broken record followed by more data is real corruption,
                    // not an interrupted append.
                    std::string rest;
                    if (std::getline(in, rest))
                        throw CacheCorruptError("record ending at byte " +
                                                std::to_string(consumed + record_bytes));
                }
                cache.recovered_ = true;
                break;
            }
            Key key{rec["profile"].get<std::string>(), rec["source_id"].get<std::string>(),
                    rec["source_index"].get<std::size_t>(), rec["relation"].get<std::string>()};
            cache.index_[key] = rec["texts"].get<std::vector<std::string>>();
            consumed += record_bytes;
            valid_bytes = consumed;
        }
        if (cache.recovered_)
            std::filesystem::resize_file(path, valid_bytes);
    }

    cache.writer_.open(path, std::ios::app);
    if (!cache.writer_) throw SickError("cannot open cache for append: " + path);
    return cache;
}

const std::vector<std::string>* InferenceCache::lookup(const Key& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? nullptr : &it->second;
}

void InferenceCache::append(const Key& key, const std::vector<std::string>& texts) {
    auto [it, inserted] = index_.emplace(key, texts);
    if (!inserted) return;   // append-only: first write wins
    nlohmann::json rec;
    rec["profile"] = key.profile_id;
    rec["source_id"] = key.source_id;
    rec["source_index"] = key.source_index;
    rec["relation"] = key.relation;
    rec["texts"] = texts;
    writer_ << rec.dump() << "\n";
    writer_.flush();
}

} // namespace sick
