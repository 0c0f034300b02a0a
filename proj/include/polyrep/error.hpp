#pragma once
// Exception types raised by the polyrep library.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyrep {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A value breaks an opinion or mass-assignment constraint.
class ConstraintViolation : public Error {
public:
    using Error::Error;
};

// Evidence is requested for an opinion with zero uncertainty.
class DogmaticOpinion : public Error {
public:
    using Error::Error;
};

enum class FusionErrorKind { BothDogmatic, PropositionMismatch, RecommenderMismatch };

class FusionError : public Error {
public:
    FusionError(FusionErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
    FusionErrorKind kind() const noexcept { return kind_; }

private:
    FusionErrorKind kind_;
};

class InvalidFrame : public Error {
public:
    using Error::Error;
};

class UnknownState : public Error {
public:
    using Error::Error;
};

class MalformedTopic : public Error {
public:
    using Error::Error;
};

// Raised when a configured lexicon or stopword file cannot be read.
class LexiconUnavailable : public Error {
public:
    using Error::Error;
};

// Plan syntax error. offset is 1-based and counts bytes.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
        : Error(what), offset_(offset), expected_(std::move(expected)) {}
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

// A fusion failure inside a plan, tagged with the failing subtree's source span
// as half-open 0-based byte offsets [begin, end).
class PlanEvaluationError : public FusionError {
public:
    PlanEvaluationError(FusionErrorKind kind, std::size_t begin, std::size_t end, const std::string& what)
        : FusionError(kind, what), begin_(begin), end_(end) {}
    std::size_t span_begin() const noexcept { return begin_; }
    std::size_t span_end() const noexcept { return end_; }

private:
    std::size_t begin_;
    std::size_t end_;
};

// Unreadable or malformed configuration file.
class ConfigError : public Error {
public:
    using Error::Error;
};

class DegenerateDistribution : public Error {
public:
    using Error::Error;
};

}  // namespace polyrep
