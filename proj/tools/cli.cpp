#include "cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "polyrep/error.hpp"
#include "polyrep/format.hpp"
#include "polyrep/fusion.hpp"
#include "polyrep/oracle.hpp"
#include "polyrep/plan.hpp"
#include "run_output.hpp"

namespace polyrep::cli {

namespace {

std::shared_ptr<spdlog::logger> logger() {
    static const auto instance = [] {
        auto log = spdlog::stderr_logger_st("polyrep");
        log->set_pattern("[%l] %v");
        const char* level = std::getenv("POLYREP_LOG_LEVEL");
        log->set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
        return log;
    }();
    return instance;
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Opinion parse_quad(const std::string& text, std::string owner, std::string proposition) {
    std::array<double, 4> v{};
    std::size_t start = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::size_t end = text.find(',', start);
        const bool last = i + 1 == v.size();
        if ((end == std::string::npos) != last) {
            throw UsageError("opinion '" + text + "' must be four comma-separated numbers b,d,u,a");
        }
        const std::string field = text.substr(start, last ? std::string::npos : end - start);
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v[i]);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw UsageError("opinion '" + text + "': '" + field + "' is not a number");
        }
        start = end + 1;
    }
    try {
        return Opinion::make(std::move(owner), std::move(proposition), v[0], v[1], v[2], v[3]);
    } catch (const ConstraintViolation& e) {
        throw UsageError("opinion '" + text + "': " + e.what());
    }
}

std::string quad_line(const Opinion& op) {
    return fixed6(op.belief()) + "," + fixed6(op.disbelief()) + "," + fixed6(op.uncertainty()) +
           "," + fixed6(op.base_rate());
}

struct OpinionArgs {
    double r = 0.0;
    double s = 0.0;
    double a = 0.5;
};

struct FuseArgs {
    std::string op;
    std::vector<std::string> opinions;
};

struct RunArgs {
    std::string topics;
    std::string scenarios;
    std::string extractor;
    std::vector<std::string> scenario_names;
    double base_rate = 0.5;
    std::string format = "both";
    bool strict = false;
    unsigned jobs = 0;
};

struct ValidateArgs {
    std::uint64_t seed = 42;
    std::uint64_t samples = 1'000'000;
};

int cmd_opinion(const OpinionArgs& args, std::ostream& out) {
    if (args.r < 0.0 || args.s < 0.0) throw UsageError("--r and --s must be non-negative");
    if (args.a < 0.0 || args.a > 1.0) throw UsageError("--a must lie in [0,1]");
    const Opinion op = from_evidence("cli", "x", EvidenceCount::make(args.r, args.s), args.a);
    out << "b=" << fixed6(op.belief()) << " d=" << fixed6(op.disbelief())
        << " u=" << fixed6(op.uncertainty()) << " a=" << fixed6(op.base_rate())
        << " E=" << fixed6(expectation(op)) << '\n';
    return kOk;
}

int cmd_fuse(const FuseArgs& args, std::ostream& out, std::ostream& err) {
    if (args.opinions.size() != 2) throw UsageError("fuse takes exactly two opinions");
    try {
        if (args.op == "consensus") {
            const Opinion a = parse_quad(args.opinions[0], "A", "x");
            const Opinion b = parse_quad(args.opinions[1], "B", "x");
            out << quad_line(consensus(a, b)) << '\n';
        } else {
            const Opinion trust = parse_quad(args.opinions[0], "A", "B");
            const Opinion rec = parse_quad(args.opinions[1], "B", "x");
            out << quad_line(recommend(trust, rec)) << '\n';
        }
    } catch (const FusionError& e) {
        err << "error: " << e.what() << '\n';
        return kFusion;
    }
    return kOk;
}

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
    ExtractorSet extractors;
    if (!args.extractor.empty()) {
        try {
            extractors = ExtractorSet::load(ExtractorConfig::load(args.extractor));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
    }

    std::vector<Scenario> scenarios;
    try {
        scenarios = parse_scenarios(read_file(args.scenarios));
    } catch (const Error& e) {
        err << "error: " << args.scenarios << ": " << e.what() << '\n';
        return kPlan;
    }
    std::vector<const Scenario*> selected;
    for (const auto& name : args.scenario_names) {
        const Scenario* s = find_scenario(scenarios, name);
        if (!s) {
            err << "error: scenario '" << name << "' not found in " << args.scenarios << '\n';
            return kPlan;
        }
        selected.push_back(s);
    }

    std::vector<Topic> topics;
    try {
        const std::filesystem::path path(args.topics);
        topics = parse_topics(read_file(path), path.stem().string());
    } catch (const MalformedTopic& e) {
        err << "error: " << args.topics << ": " << e.what() << '\n';
        return kMalformedTopic;
    }
    logger()->info("running {} topic(s) through {} scenario(s)", topics.size(), selected.size());

    const unsigned jobs = args.jobs ? args.jobs : std::max(1u, std::thread::hardware_concurrency());
    const auto results = run_batch(topics, selected, extractors, args.base_rate, jobs);

    bool failed = false;
    for (const auto& r : results) {
        if (const auto* e = std::get_if<RunError>(&r)) {
            failed = true;
            logger()->warn("topic {} scenario {}: {}", e->topic, e->scenario, e->message);
        }
    }
    if (args.format != "tsv") out << format_table(results);
    if (args.format == "both" && !results.empty()) out << '\n';
    if (args.format != "table") out << format_lines(results);
    return failed && args.strict ? kFusion : kOk;
}

int cmd_validate(const ValidateArgs& args, std::ostream& out) {
    if (args.samples < kMinOracleSamples) {
        throw UsageError("--samples must be at least " + std::to_string(kMinOracleSamples));
    }
    const auto reports = run_oracle_suite(args.seed, args.samples);
    out << format_reports(reports);
    const bool all_pass =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    return all_pass ? kOk : kOracleFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subjective-logic fusion of information-need representations", "polyrep"};
    app.require_subcommand(1);

    OpinionArgs opinion_args;
    auto* opinion = app.add_subcommand("opinion", "Map evidence counts to an opinion");
    opinion->add_option("--r", opinion_args.r, "Positive evidence")->required();
    opinion->add_option("--s", opinion_args.s, "Negative evidence")->required();
    opinion->add_option("--a", opinion_args.a, "Base rate")->capture_default_str();

    FuseArgs fuse_args;
    auto* fuse = app.add_subcommand("fuse", "Combine two opinions given as b,d,u,a");
    fuse->add_option("--op", fuse_args.op, "consensus | recommend")
        ->required()
        ->check(CLI::IsMember({"consensus", "recommend"}));
    fuse->add_option("opinions", fuse_args.opinions,
                     "Two opinions; for recommend the first is the trust opinion")
        ->required()
        ->expected(2);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run topics through scenario fusion plans");
    run->add_option("--topics", run_args.topics, "Topic file")->required()->check(CLI::ExistingFile);
    run->add_option("--scenarios", run_args.scenarios, "Scenario config")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("--extractor", run_args.extractor, "Extractor config")->check(CLI::ExistingFile);
    run->add_option("--scenario", run_args.scenario_names, "Scenario name (repeatable)")->required();
    run->add_option("--base-rate", run_args.base_rate, "Base rate of representation opinions")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    run->add_option("--format", run_args.format, "table | tsv | both")
        ->check(CLI::IsMember({"table", "tsv", "both"}))
        ->capture_default_str();
    run->add_flag("--strict", run_args.strict, "Exit nonzero when any topic fails");
    run->add_option("--jobs", run_args.jobs, "Worker threads (0 = hardware concurrency)");

    ValidateArgs validate_args;
    auto* validate = app.add_subcommand("validate", "Run the validation oracles");
    validate->add_option("--seed", validate_args.seed, "Random seed")->capture_default_str();
    validate->add_option("--samples", validate_args.samples, "Beta samples per check")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*opinion) return cmd_opinion(opinion_args, out);
        if (*fuse) return cmd_fuse(fuse_args, out, err);
        if (*run) return cmd_run(run_args, out, err);
        if (*validate) return cmd_validate(validate_args, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ConstraintViolation& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace polyrep::cli
