#ifndef SICK_TOKENIZER_HPP
#define SICK_TOKENIZER_HPP

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sick {

// Fixed ids shared by every tokenizer so model checkpoints and serialized
// examples stay interchangeable.
struct SpecialIds {
    int pad = 0;
    int begin = 1;
    int end = 2;
    int unk = 3;
    int open_marker = 4;    // <I>
    int close_marker = 5;   // </I>
};

inline constexpr const char* kOpenMarker = "<I>";
inline constexpr const char* kCloseMarker = "</I>";

// Tokenization interface for the sequencing pipeline. Implementations must
// keep <I> and </I> atomic (single tokens) and satisfy encode-then-decode
// identity on normalized in-vocabulary text.
class Tokenizer {
public:
    virtual ~Tokenizer() = default;

    virtual std::vector<int> encode(std::string_view text) const = 0;
    virtual std::string decode(std::span<const int> ids) const = 0;

    virtual int vocab_size() const = 0;
    virtual SpecialIds specials() const = 0;

    bool is_special(int id) const {
        const SpecialIds s = specials();
        return id == s.pad || id == s.begin || id == s.end || id == s.unk ||
               id == s.open_marker || id == s.close_marker;
    }
};

// Whitespace tokenizer with a first-seen-order vocabulary. Grows while
// `frozen` is false; afterwards unknown words map to <unk>. decode() skips
// pad tokens and renders words space-joined, so encode∘decode is the
// identity on whitespace-normalized in-vocabulary text.
class WhitespaceTokenizer : public Tokenizer {
public:
    WhitespaceTokenizer();
    explicit WhitespaceTokenizer(const std::vector<std::string>& words);

    std::vector<int> encode(std::string_view text) const override;
    std::string decode(std::span<const int> ids) const override;

    int vocab_size() const override { return static_cast<int>(id_to_word_.size()); }
    SpecialIds specials() const override { return specials_; }

    // Adds every word of `text` to the vocabulary (no-op when frozen).
    void fit(std::string_view text);
    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    void save(const std::string& path) const;
    static WhitespaceTokenizer load(const std::string& path);

private:
    int add_word(const std::string& word);

    SpecialIds specials_;
    std::vector<std::string> id_to_word_;
    std::unordered_map<std::string, int> word_to_id_;
    bool frozen_ = false;
};

} // namespace sick

#endif // SICK_TOKENIZER_HPP
