#include "run_output.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "polyrep/error.hpp"
#include "polyrep/format.hpp"

namespace polyrep::cli {

namespace {

Quad quad(const Opinion& op) {
    return {op.belief(), op.disbelief(), op.uncertainty(), op.base_rate()};
}

std::string tsv_safe(std::string text) {
    std::replace_if(text.begin(), text.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; },
                    ' ');
    return text;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t end = line.find(sep, start);
        fields.push_back(line.substr(start, end - start));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return fields;
}

template <typename T>
T number(std::string_view field, std::size_t line_no) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ConfigError("run output line " + std::to_string(line_no) + ": bad number '" +
                          std::string(field) + "'");
    }
    return value;
}

}  // namespace

RunOutput make_run_output(const std::string& topic, const std::string& scenario,
                          const Evaluation& evaluation) {
    RunOutput out;
    out.topic = topic;
    out.scenario = scenario;
    out.fused = quad(evaluation.result);
    out.expectation = expectation(evaluation.result);
    for (const auto& entry : evaluation.trace) {
        out.trace.push_back({entry.node, to_string(entry.kind), entry.operands, quad(entry.result),
                             entry.expression});
    }
    return out;
}

std::vector<RunResult> run_batch(const std::vector<Topic>& topics,
                                 const std::vector<const Scenario*>& scenarios,
                                 const ExtractorSet& extractors, double base_rate, unsigned jobs) {
    std::vector<std::optional<RunResult>> slots(topics.size() * scenarios.size());
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        for (std::size_t t = next++; t < topics.size(); t = next++) {
            for (std::size_t s = 0; s < scenarios.size(); ++s) {
                const Topic& topic = topics[t];
                const Scenario& scenario = *scenarios[s];
                auto& slot = slots[t * scenarios.size() + s];
                try {
                    slot = make_run_output(
                        topic.id(), scenario.name,
                        evaluate_plan_traced(scenario.plan, topic, extractors, base_rate));
                } catch (const Error& e) {
                    slot = RunError{topic.id(), scenario.name, e.what()};
                }
            }
        }
    };

    jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(topics.size(), 1)));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<RunResult> results;
    results.reserve(slots.size());
    for (auto& slot : slots) results.push_back(std::move(*slot));
    return results;
}

std::string format_lines(const std::vector<RunResult>& results) {
    std::ostringstream out;
    for (const auto& result : results) {
        if (const auto* err = std::get_if<RunError>(&result)) {
            out << "ERROR\t" << err->topic << '\t' << err->scenario << '\t' << tsv_safe(err->message)
                << '\n';
            continue;
        }
        const auto& run = std::get<RunOutput>(result);
        out << "RUN\t" << run.topic << '\t' << run.scenario << '\t' << fixed6(run.fused.b) << '\t'
            << fixed6(run.fused.d) << '\t' << fixed6(run.fused.u) << '\t' << fixed6(run.fused.a)
            << '\t' << fixed6(run.expectation) << '\t' << run.trace.size() << '\n';
        for (const auto& t : run.trace) {
            std::string operands;
            for (std::size_t i = 0; i < t.operands.size(); ++i) {
                if (i) operands += ',';
                operands += std::to_string(t.operands[i]);
            }
            if (operands.empty()) operands = "-";
            out << "TRACE\t" << run.topic << '\t' << run.scenario << '\t' << t.node << '\t' << t.op
                << '\t' << operands << '\t' << fixed6(t.result.b) << '\t' << fixed6(t.result.d)
                << '\t' << fixed6(t.result.u) << '\t' << fixed6(t.result.a) << '\t'
                << t.expression << '\n';
        }
    }
    return out.str();
}

std::string format_table(const std::vector<RunResult>& results) {
    std::size_t topic_w = 5;
    std::size_t scenario_w = 8;
    for (const auto& result : results) {
        std::visit(
            [&](const auto& r) {
                topic_w = std::max(topic_w, r.topic.size());
                scenario_w = std::max(scenario_w, r.scenario.size());
            },
            result);
    }
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(topic_w)) << "topic" << "  "
        << std::setw(static_cast<int>(scenario_w)) << "scenario"
        << "  belief    disbelief uncert.   base rate expect.   nodes\n";
    for (const auto& result : results) {
        std::visit(
            [&](const auto& r) {
                out << std::setw(static_cast<int>(topic_w)) << r.topic << "  "
                    << std::setw(static_cast<int>(scenario_w)) << r.scenario << "  ";
            },
            result);
        if (const auto* err = std::get_if<RunError>(&result)) {
            out << "error: " << err->message << '\n';
            continue;
        }
        const auto& run = std::get<RunOutput>(result);
        for (double v : {run.fused.b, run.fused.d, run.fused.u, run.fused.a, run.expectation}) {
            out << fixed6(v) << "  ";
        }
        out << run.trace.size() << '\n';
    }
    return out.str();
}

std::vector<RunResult> parse_lines(std::string_view text) {
    std::vector<RunResult> results;
    std::size_t pending_trace = 0;
    std::size_t line_no = 0;
    for (const auto raw : split(text, '\n')) {
        ++line_no;
        std::string_view line = raw;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto fields = split(line, '\t');
        const auto where = "run output line " + std::to_string(line_no);
        const auto need = [&](std::size_t n) {
            if (fields.size() != n) {
                throw ConfigError(where + ": expected " + std::to_string(n) + " fields, got " +
                                  std::to_string(fields.size()));
            }
        };
        const std::string_view tag = fields.front();
        if (pending_trace > 0 && tag != "TRACE") {
            throw ConfigError(where + ": missing TRACE lines");
        }
        if (tag == "RUN") {
            need(9);
            RunOutput run;
            run.topic = fields[1];
            run.scenario = fields[2];
            run.fused = {number<double>(fields[3], line_no), number<double>(fields[4], line_no),
                         number<double>(fields[5], line_no), number<double>(fields[6], line_no)};
            run.expectation = number<double>(fields[7], line_no);
            pending_trace = number<std::size_t>(fields[8], line_no);
            results.emplace_back(std::move(run));
        } else if (tag == "TRACE") {
            need(11);
            if (pending_trace == 0 || results.empty() ||
                !std::holds_alternative<RunOutput>(results.back())) {
                throw ConfigError(where + ": TRACE without RUN");
            }
            auto& run = std::get<RunOutput>(results.back());
            if (fields[1] != run.topic || fields[2] != run.scenario) {
                throw ConfigError(where + ": TRACE does not match its RUN line");
            }
            TraceRecord t;
            t.node = number<std::size_t>(fields[3], line_no);
            t.op = fields[4];
            if (fields[5] != "-") {
                for (const auto op : split(fields[5], ',')) {
                    t.operands.push_back(number<std::size_t>(op, line_no));
                }
            }
            t.result = {number<double>(fields[6], line_no), number<double>(fields[7], line_no),
                        number<double>(fields[8], line_no), number<double>(fields[9], line_no)};
            t.expression = fields[10];
            run.trace.push_back(std::move(t));
            --pending_trace;
        } else if (tag == "ERROR") {
            need(4);
            results.emplace_back(
                RunError{std::string(fields[1]), std::string(fields[2]), std::string(fields[3])});
        }
    }
    if (pending_trace > 0) throw ConfigError("run output ends inside a trace");
    return results;
}

}  // namespace polyrep::cli
