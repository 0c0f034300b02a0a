#pragma once
// Results of running topics through scenario plans, and their tab-separated
// line format.
//
//   RUN    topic scenario b d u a E trace_nodes
//   TRACE  topic scenario node op operands b d u a expression
//   ERROR  topic scenario message
//
// Fields are separated by single tabs, reals use 6 decimals, and `operands` is
// a comma-separated list of earlier node indices or "-" for leaves. Each RUN
// line is followed by exactly trace_nodes TRACE lines in post-order. Lines with
// any other leading tag are ignored by the parser.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polyrep/extractor.hpp"
#include "polyrep/plan.hpp"
#include "polyrep/topic.hpp"

namespace polyrep::cli {

struct Quad {
    double b = 0.0;
    double d = 0.0;
    double u = 1.0;
    double a = 0.5;
    bool operator==(const Quad&) const = default;
};

struct TraceRecord {
    std::size_t node = 0;
    std::string op;
    std::vector<std::size_t> operands;
    Quad result;
    std::string expression;
    bool operator==(const TraceRecord&) const = default;
};

struct RunOutput {
    std::string topic;
    std::string scenario;
    Quad fused;
    double expectation = 0.0;
    std::vector<TraceRecord> trace;
    bool operator==(const RunOutput&) const = default;
};

struct RunError {
    std::string topic;
    std::string scenario;
    std::string message;
    bool operator==(const RunError&) const = default;
};

using RunResult = std::variant<RunOutput, RunError>;

RunOutput make_run_output(const std::string& topic, const std::string& scenario,
                          const Evaluation& evaluation);

// Evaluates every (topic, scenario) pair, topic-major. Topics are spread over
// `jobs` worker threads; the returned order does not depend on scheduling.
std::vector<RunResult> run_batch(const std::vector<Topic>& topics,
                                 const std::vector<const Scenario*>& scenarios,
                                 const ExtractorSet& extractors, double base_rate,
                                 unsigned jobs = 1);

std::string format_lines(const std::vector<RunResult>& results);
std::string format_table(const std::vector<RunResult>& results);

// Throws polyrep::ConfigError on malformed RUN/TRACE/ERROR lines.
std::vector<RunResult> parse_lines(std::string_view text);

}  // namespace polyrep::cli
