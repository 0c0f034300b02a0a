#include "polyrep/plan.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>

#include "polyrep/error.hpp"
#include "polyrep/fusion.hpp"

namespace polyrep {

// ---------------------------------------------------------------------------
// AST

PlanExpr PlanExpr::rep(int index, SourceSpan span) {
    if (index < 1 || index > kRepresentationCount) {
        throw ConstraintViolation("representation index " + std::to_string(index) +
                                  " not in 1..5");
    }
    auto node = std::make_shared<Node>();
    node->kind = PlanKind::RepRef;
    node->rep_index = index;
    node->span = span;
    return PlanExpr(std::move(node));
}

PlanExpr PlanExpr::literal(double b, double d, double u, double a, SourceSpan span) {
    const Opinion op = Opinion::make({}, {}, b, d, u, a);
    auto node = std::make_shared<Node>();
    node->kind = PlanKind::Literal;
    node->literal = {op.belief(), op.disbelief(), op.uncertainty(), op.base_rate()};
    node->span = span;
    return PlanExpr(std::move(node));
}

PlanExpr PlanExpr::binary(PlanKind kind, PlanExpr l, PlanExpr r, SourceSpan span) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->count = 1 + l.node_count() + r.node_count();
    node->depth = 1 + std::max(l.depth(), r.depth());
    node->left = std::make_unique<PlanExpr>(std::move(l));
    node->right = std::make_unique<PlanExpr>(std::move(r));
    node->span = span;
    return PlanExpr(std::move(node));
}

PlanExpr PlanExpr::consensus(PlanExpr left, PlanExpr right, SourceSpan span) {
    return binary(PlanKind::Consensus, std::move(left), std::move(right), span);
}

PlanExpr PlanExpr::recommend(PlanExpr trust, PlanExpr rec, SourceSpan span) {
    return binary(PlanKind::Recommend, std::move(trust), std::move(rec), span);
}

bool operator==(const PlanExpr& a, const PlanExpr& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case PlanKind::RepRef:
            return a.rep_index() == b.rep_index();
        case PlanKind::Literal:
            return a.literal_values() == b.literal_values();
        case PlanKind::Consensus:
        case PlanKind::Recommend:
            return a.left() == b.left() && a.right() == b.right();
    }
    return false;
}

const char* to_string(PlanKind kind) noexcept {
    switch (kind) {
        case PlanKind::RepRef: return "rep";
        case PlanKind::Literal: return "literal";
        case PlanKind::Consensus: return "consensus";
        case PlanKind::Recommend: return "recommend";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    PlanExpr parse() {
        PlanExpr expr = parse_expr(0);
        skip_ws();
        if (pos_ != src_.size()) fail({"(+)", "(x)", "end of input"});
        return expr;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::vector<std::string> expected, std::string detail = {}) const {
        fail_at(pos_, std::move(expected), std::move(detail));
    }

    [[noreturn]] void fail_at(std::size_t at, std::vector<std::string> expected,
                              std::string detail = {}) const {
        std::string msg = "plan parse error at offset " + std::to_string(at + 1) + ": ";
        if (!detail.empty()) {
            msg += detail;
        } else {
            msg += at < src_.size() ? "unexpected '" + std::string(1, src_[at]) + "'"
                                    : "unexpected end of input";
            msg += ", expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) msg += i + 1 == expected.size() ? " or " : ", ";
                msg += expected[i];
            }
        }
        throw ParseError(at + 1, std::move(expected), msg);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool at_operator(std::string_view op) {
        skip_ws();
        return src_.substr(pos_, op.size()) == op;
    }

    void expect(char c, std::vector<std::string> expected) {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != c) fail(std::move(expected));
        ++pos_;
    }

    PlanExpr checked_depth(PlanExpr expr, std::size_t begin) const {
        if (expr.depth() > kMaxPlanDepth) {
            fail_at(begin, {}, "plan nesting exceeds depth " + std::to_string(kMaxPlanDepth));
        }
        return expr;
    }

    // expr := rec_chain ('(+)' rec_chain)*
    PlanExpr parse_expr(std::size_t nesting) {
        skip_ws();
        const std::size_t begin = pos_;
        PlanExpr lhs = parse_rec_chain(nesting);
        while (at_operator("(+)")) {
            pos_ += 3;
            PlanExpr rhs = parse_rec_chain(nesting);
            lhs = checked_depth(
                PlanExpr::consensus(std::move(lhs), std::move(rhs), {begin, pos_}), begin);
        }
        return lhs;
    }

    // rec_chain := term ('(x)' term)*
    PlanExpr parse_rec_chain(std::size_t nesting) {
        skip_ws();
        const std::size_t begin = pos_;
        PlanExpr lhs = parse_term(nesting);
        while (at_operator("(x)")) {
            pos_ += 3;
            PlanExpr rhs = parse_term(nesting);
            lhs = checked_depth(
                PlanExpr::recommend(std::move(lhs), std::move(rhs), {begin, pos_}), begin);
        }
        return lhs;
    }

    std::string_view word() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        return src_.substr(start, pos_ - start);
    }

    PlanExpr parse_term(std::size_t nesting) {
        static const std::vector<std::string> kTermStart = {"consensus(", "recommend(", "rep<1-5>",
                                                            "opinion("};
        skip_ws();
        const std::size_t begin = pos_;
        if (nesting >= kMaxPlanDepth) {
            fail_at(begin, {}, "plan nesting exceeds depth " + std::to_string(kMaxPlanDepth));
        }
        const std::string_view w = word();

        if (w == "rep") {
            if (pos_ >= src_.size() || src_[pos_] < '1' || src_[pos_] > '5') {
                fail({"1", "2", "3", "4", "5"});
            }
            const int index = src_[pos_] - '0';
            ++pos_;
            if (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
                fail_at(begin, kTermStart, "unknown representation '" +
                                               std::string(src_.substr(begin, pos_ + 1 - begin)) +
                                               "'");
            }
            return PlanExpr::rep(index, {begin, pos_});
        }
        if ((w == "consensus" || w == "recommend" || w == "opinion") &&
            (skip_ws(), pos_ < src_.size() && src_[pos_] == '(')) {
            ++pos_;
            if (w == "opinion") return parse_literal(begin);
            PlanExpr lhs = parse_expr(nesting + 1);
            expect(',', {"(+)", "(x)", ","});
            PlanExpr rhs = parse_expr(nesting + 1);
            expect(')', {"(+)", "(x)", ")"});
            const SourceSpan span{begin, pos_};
            return checked_depth(w == "consensus"
                                     ? PlanExpr::consensus(std::move(lhs), std::move(rhs), span)
                                     : PlanExpr::recommend(std::move(lhs), std::move(rhs), span),
                                 begin);
        }
        if (w == "consensus" || w == "recommend" || w == "opinion") fail({"("});
        fail_at(begin, kTermStart);
    }

    double parse_number() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'E' ||
                c == '+' || c == '-') {
                ++pos_;
            } else {
                break;
            }
        }
        double value = 0.0;
        const char* first = src_.data() + start;
        const char* last = src_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (start == pos_ || ec != std::errc{} || ptr != last) {
            pos_ = start;
            fail({"number"});
        }
        return value;
    }

    PlanExpr parse_literal(std::size_t begin) {
        std::array<double, 4> v{};
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = parse_number();
            if (i + 1 < v.size()) expect(',', {","});
        }
        expect(')', {")"});
        try {
            return PlanExpr::literal(v[0], v[1], v[2], v[3], {begin, pos_});
        } catch (const ConstraintViolation& e) {
            fail_at(begin, {"valid opinion"}, std::string("invalid opinion literal: ") + e.what());
        }
    }
};

void print(const PlanExpr& plan, std::string& out) {
    switch (plan.kind()) {
        case PlanKind::RepRef:
            out += "rep" + std::to_string(plan.rep_index());
            return;
        case PlanKind::Literal: {
            out += "opinion(";
            const auto& v = plan.literal_values();
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) out += ", ";
                char buf[32];
                auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v[i]);
                out.append(buf, ptr);
            }
            out += ")";
            return;
        }
        case PlanKind::Consensus:
        case PlanKind::Recommend:
            out += to_string(plan.kind());
            out += "(";
            print(plan.left(), out);
            out += ", ";
            print(plan.right(), out);
            out += ")";
            return;
    }
}

}  // namespace

PlanExpr parse_plan(std::string_view source) { return Parser(source).parse(); }

std::string pretty_print(const PlanExpr& plan) {
    std::string out;
    print(plan, out);
    return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
public:
    Evaluator(const Topic& topic, const ExtractorSet& extractors, double base_rate)
        : topic_(topic), extractors_(extractors), base_rate_(base_rate) {}

    std::size_t eval(const PlanExpr& plan) {
        switch (plan.kind()) {
            case PlanKind::RepRef:
                return record(plan, {}, rep_opinion(plan.rep_index()));
            case PlanKind::Literal: {
                const auto& v = plan.literal_values();
                return record(plan, {}, Opinion::make("literal", topic_.id(), v[0], v[1], v[2], v[3]));
            }
            case PlanKind::Consensus:
            case PlanKind::Recommend:
                break;
        }
        const std::size_t l = eval(plan.left());
        const std::size_t r = eval(plan.right());
        const Opinion& lhs = trace_[l].result;
        const Opinion& rhs = trace_[r].result;
        try {
            Opinion out = plan.kind() == PlanKind::Consensus
                              ? consensus(lhs, rhs)
                              : recommend(as_trust_in(lhs, rhs.owner()), rhs);
            return record(plan, {l, r}, std::move(out));
        } catch (const FusionError& e) {
            const SourceSpan span = plan.span();
            throw PlanEvaluationError(e.kind(), span.begin, span.end,
                                      std::string(e.what()) + " in '" + pretty_print(plan) +
                                          "' (offsets " + std::to_string(span.begin + 1) + "-" +
                                          std::to_string(span.end) + ")");
        }
    }

    std::vector<TraceEntry> take_trace() { return std::move(trace_); }

private:
    const Opinion& rep_opinion(int index) {
        auto& slot = reps_[static_cast<std::size_t>(index - 1)];
        if (!slot) slot = representation_opinion(topic_, index, extractors_, base_rate_);
        return *slot;
    }

    std::size_t record(const PlanExpr& plan, std::vector<std::size_t> operands, Opinion result) {
        const std::size_t index = trace_.size();
        trace_.push_back({index, plan.kind(), std::move(operands), pretty_print(plan), std::move(result)});
        return index;
    }

    const Topic& topic_;
    const ExtractorSet& extractors_;
    double base_rate_;
    std::array<std::optional<Opinion>, kRepresentationCount> reps_;
    std::vector<TraceEntry> trace_;
};

}  // namespace

Evaluation evaluate_plan_traced(const PlanExpr& plan, const Topic& topic,
                                const ExtractorSet& extractors, double base_rate) {
    Evaluator ev(topic, extractors, base_rate);
    const std::size_t root = ev.eval(plan);
    auto trace = ev.take_trace();
    Opinion result = trace[root].result;
    return {std::move(result), std::move(trace)};
}

Opinion evaluate_plan(const PlanExpr& plan, const Topic& topic, const ExtractorSet& extractors,
                      double base_rate) {
    return evaluate_plan_traced(plan, topic, extractors, base_rate).result;
}

// ---------------------------------------------------------------------------
// Scenario files

std::vector<Scenario> parse_scenarios(std::string_view text) {
    std::vector<Scenario> scenarios;
    std::set<std::string, std::less<>> names;
    std::size_t start = 0;
    std::size_t line_no = 0;
    while (start < text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        const auto where = "scenario line " + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            if (std::all_of(line.begin(), line.end(),
                            [](char c) { return std::isspace(static_cast<unsigned char>(c)); })) {
                continue;
            }
            throw ConfigError(where + ": expected 'name = plan'");
        }
        std::string name = normalize_whitespace(line.substr(0, eq));
        const bool valid_name =
            !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
                return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
            });
        if (!valid_name) throw ConfigError(where + ": invalid scenario name '" + name + "'");
        if (!names.insert(name).second) {
            throw ConfigError(where + ": scenario '" + name + "' defined twice");
        }

        std::string_view rest = line.substr(eq + 1);
        const auto first = rest.find_first_not_of(" \t\r");
        rest = first == std::string_view::npos ? std::string_view{} : rest.substr(first);
        rest = rest.substr(0, rest.find_last_not_of(" \t\r") + 1);
        // Offsets in parse errors are relative to the trimmed plan text.
        std::string source(rest);
        try {
            PlanExpr plan = parse_plan(source);
            scenarios.push_back({std::move(name), normalize_whitespace(source), std::move(plan)});
        } catch (const ParseError& e) {
            throw ParseError(e.offset(), e.expected(), where + ": " + e.what());
        }
    }
    return scenarios;
}

const Scenario* find_scenario(const std::vector<Scenario>& scenarios, std::string_view name) {
    for (const auto& s : scenarios) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

}  // namespace polyrep
