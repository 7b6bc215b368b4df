#ifndef SICK_SEQUENCING_HPP
#define SICK_SEQUENCING_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sick/corpus.hpp"
#include "sick/selection.hpp"
#include "sick/tokenizer.hpp"

namespace sick {

enum class Segment : char {
    dialogue = 'd',
    commonsense = 'c',
    marker = 'm',
    special = 's',
};

char segment_char(Segment s);
Segment segment_from_char(char c);

// One (utterance, inference) pair of the cross-concatenated input.
struct AugmentedBlock {
    std::string utterance;     // formatted "Name : text"
    std::string commonsense;
};

struct AugmentedSequence {
    std::string text;                        // u_1 <I> c_1 </I> u_2 <I> c_2 </I> ...
    std::vector<AugmentedBlock> blocks;
    std::vector<Segment> segments;           // one label per whitespace word of text
    std::vector<std::size_t> pair_boundaries; // word offset where each block starts
};

// Interleaves utterances with their selected inferences, bracketing each
// inference with <I>/</I>. Throws LengthMismatch when |selections| != n.
AugmentedSequence cross_concatenate(const Dialogue& dialogue,
                                    const std::vector<SelectedCommonsense>& selections);

// Exact inverse of cross_concatenate on well-formed text: recovers the
// utterance texts and inference texts. Throws UnbalancedMarkers /
// StrayMarker on malformed marker structure.
std::pair<std::vector<std::string>, std::vector<std::string>>
parse_augmented(const std::string& text);

struct TokenizedInput {
    std::vector<int> ids;                    // length == max_input_len (padded)
    std::vector<Segment> segments;           // same length as ids
    std::vector<std::size_t> pair_boundaries; // token offset of each kept block
    std::size_t kept_blocks = 0;
};

// Tokenizes block by block and fits to the input budget: whole trailing
// blocks are dropped, never split; the result is padded to exactly
// max_input_len. Throws BlockTooLarge when even the first block cannot fit.
TokenizedInput tokenize_and_fit(const AugmentedSequence& seq, const Tokenizer& tokenizer,
                                std::size_t max_input_len);

struct SequenceLimits {
    std::size_t max_input_len = 1024;
    std::size_t max_output_len = 100;
};

struct TrainingExample {
    std::string id;
    TokenizedInput input;
    std::vector<int> summary_target;       // begin ... end, <= max_output_len
    std::vector<int> commonsense_target;   // begin ... end, <= max_output_len; empty in sick mode
};

// Joins the selected target inferences in sentence order, one terminal
// period each: ["to make fun of"] -> "to make fun of.".
std::string serialize_target_commonsense(const std::vector<SelectedCommonsense>& z);

// Assembles the (X, Y, Z) triple. C must align with the dialogue, Z with the
// summary sentences. With require_commonsense_target (SICK++ training), an
// empty Z raises EmptyTarget; otherwise the commonsense target is left empty.
TrainingExample build_training_example(const Dialogue& dialogue,
                                       const std::vector<SelectedCommonsense>& input_commonsense,
                                       const SummaryDoc& summary,
                                       const std::vector<SelectedCommonsense>& target_commonsense,
                                       const Tokenizer& tokenizer, const SequenceLimits& limits,
                                       bool require_commonsense_target);

// Plain-dialogue variant (no commonsense, no markers) used by the zero-shot
// control arm; truncation keeps whole utterances.
TokenizedInput tokenize_plain_dialogue(const Dialogue& dialogue, const Tokenizer& tokenizer,
                                       std::size_t max_input_len);

} // namespace sick

#endif // SICK_SEQUENCING_HPP
