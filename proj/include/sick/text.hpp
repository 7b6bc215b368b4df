#ifndef SICK_TEXT_HPP
#define SICK_TEXT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sick {

// Collapses runs of spaces/tabs/newlines into single spaces and strips the ends.
std::string normalize_whitespace(std::string_view text);

std::string lowercase(std::string_view text);

// Splits on whitespace. Empty input yields an empty list.
std::vector<std::string> whitespace_split(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Normalization used by the evaluation metrics: lowercase, punctuation mapped
// to standalone tokens, whitespace split. No stemming.
std::vector<std::string> metric_tokenize(std::string_view text);

// FNV-1a, used for stable content hashes (mock backends, manifests, config ids).
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 1469598103934665603ULL);

std::string hex64(std::uint64_t value);

} // namespace sick

#endif // SICK_TEXT_HPP
