#ifndef SICK_CACHE_HPP
#define SICK_CACHE_HPP

#include <cstddef>
#include <fstream>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace sick {

// Append-only JSONL journal of backend responses with an in-memory index.
// A key is either absent or holds the full beam list returned by the
// backend. Opening a journal whose final record was cut off mid-write drops
// the partial tail and continues; corruption anywhere else raises
// CacheCorrupt.
class InferenceCache {
public:
    struct Key {
        std::string profile_id;
        std::string source_id;     // dialogue id, or "<id>::summary" for targets
        std::size_t source_index = 0;
        std::string relation;

        auto tie() const { return std::tie(profile_id, source_id, source_index, relation); }
        bool operator<(const Key& other) const { return tie() < other.tie(); }
        std::string describe() const;
    };

    static InferenceCache open(const std::string& path);

    bool contains(const Key& key) const { return index_.count(key) > 0; }
    const std::vector<std::string>* lookup(const Key& key) const;
    void append(const Key& key, const std::vector<std::string>& texts);

    std::size_t size() const { return index_.size(); }
    // True when open() had to drop a truncated trailing record.
    bool recovered() const { return recovered_; }
    const std::string& path() const { return path_; }

private:
    InferenceCache() = default;

    std::string path_;
    std::map<Key, std::vector<std::string>> index_;
    std::ofstream writer_;
    bool recovered_ = false;
};

} // namespace sick

#endif // SICK_CACHE_HPP
