#ifndef SICK_ERRORS_HPP
#define SICK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sick {

// Base class for all pipeline errors so callers can catch the whole family.
class SickError : public std::runtime_error {
public:
    explicit SickError(const std::string& msg) : std::runtime_error(msg) {}
};

// corpus
class FileMissingError : public SickError {
public:
    explicit FileMissingError(const std::string& path)
        : SickError("file missing: " + path) {}
};

class SchemaViolationError : public SickError {
public:
    SchemaViolationError(const std::string& record_id, const std::string& field)
        : SickError("schema violation in record '" + record_id + "': field '" + field + "'"),
          record_id(record_id), field(field) {}
    std::string record_id;
    std::string field;
};

class DuplicateIdError : public SickError {
public:
    explicit DuplicateIdError(const std::string& id)
        : SickError("duplicate dialogue id: " + id), id(id) {}
    std::string id;
};

class EmptySummaryError : public SickError {
public:
    EmptySummaryError() : SickError("summary empty after whitespace normalization") {}
};

class EmptyCorpusError : public SickError {
public:
    EmptyCorpusError() : SickError("corpus has no examples") {}
};

// knowledge
class BackendUnavailableError : public SickError {
public:
    explicit BackendUnavailableError(const std::string& what)
        : SickError("backend unavailable: " + what) {}
};

class BackendMalformedOutputError : public SickError {
public:
    explicit BackendMalformedOutputError(const std::string& relation)
        : SickError("backend returned malformed output for relation: " + relation),
          relation(relation) {}
    std::string relation;
};

class CacheCorruptError : public SickError {
public:
    explicit CacheCorruptError(const std::string& key)
        : SickError("inference cache corrupt at: " + key), key(key) {}
    std::string key;
};

// selection
class MalformedDistributionError : public SickError {
public:
    explicit MalformedDistributionError(const std::string& what)
        : SickError("malformed NLI distribution: " + what) {}
};

class EmptyCandidateSetError : public SickError {
public:
    EmptyCandidateSetError() : SickError("candidate set is empty") {}
};

class LengthMismatchError : public SickError {
public:
    explicit LengthMismatchError(const std::string& what)
        : SickError("length mismatch: " + what) {}
};

// sequencing
class UnbalancedMarkersError : public SickError {
public:
    explicit UnbalancedMarkersError(const std::string& what)
        : SickError("unbalanced inference markers: " + what) {}
};

class StrayMarkerError : public SickError {
public:
    explicit StrayMarkerError(const std::string& what)
        : SickError("stray inference marker: " + what) {}
};

class BlockTooLargeError : public SickError {
public:
    BlockTooLargeError(std::size_t block_tokens, std::size_t budget)
        : SickError("first utterance/commonsense block (" + std::to_string(block_tokens) +
                    " tokens) exceeds input budget " + std::to_string(budget)) {}
};

class EmptyTargetError : public SickError {
public:
    explicit EmptyTargetError(const std::string& what)
        : SickError("empty target sequence: " + what) {}
};

// multitask
class ZeroProbabilityTargetError : public SickError {
public:
    explicit ZeroProbabilityTargetError(std::size_t position)
        : SickError("target token has exactly zero probability at position " +
                    std::to_string(position)) {}
};

class LambdaOutOfRangeError : public SickError {
public:
    explicit LambdaOutOfRangeError(double lambda)
        : SickError("lambda must lie in [0,1], got " + std::to_string(lambda)) {}
};

class NonFiniteLossError : public SickError {
public:
    explicit NonFiniteLossError(std::size_t step)
        : SickError("non-finite loss at training step " + std::to_string(step)), step(step) {}
    std::size_t step;
};

// evaluation / analysis
class MissingOutputError : public SickError {
public:
    explicit MissingOutputError(const std::string& id)
        : SickError("no generated summary for reference id: " + id), id(id) {}
    std::string id;
};

class ShapeMismatchError : public SickError {
public:
    explicit ShapeMismatchError(const std::string& what)
        : SickError("shape mismatch: " + what) {}
};

class EmptyTokenizationError : public SickError {
public:
    explicit EmptyTokenizationError(const std::string& what)
        : SickError("text tokenizes to nothing: " + what) {}
};

// cli
class UnknownSubcommandError : public SickError {
public:
    explicit UnknownSubcommandError(const std::string& name)
        : SickError("unknown subcommand: " + name) {}
};

class ConfigInvalidError : public SickError {
public:
    explicit ConfigInvalidError(const std::string& field)
        : SickError("invalid config field: " + field), field(field) {}
    std::string field;
};

class UpstreamArtifactMissingError : public SickError {
public:
    explicit UpstreamArtifactMissingError(const std::string& stage)
        : SickError("missing artifacts from upstream stage: " + stage), stage(stage) {}
    std::string stage;
};

} // namespace sick

#endif // SICK_ERRORS_HPP
