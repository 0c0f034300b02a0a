#pragma once
// Fusion plans: a small expression language stating how the opinions of a
// topic's representations are combined in a given search scenario.
//
//   expr    := chain of terms joined by "(+)" (consensus) and "(x)" (recommend);
//              "(x)" binds tighter, both are left-associative
//   term    := 'consensus(' expr ',' expr ')'
//            | 'recommend(' expr ',' expr ')'
//            | 'rep' digit                        digit in 1..5
//            | 'opinion(' num ',' num ',' num ',' num ')'
//
// Whitespace between tokens is ignored. In recommend(T, R) the left operand T
// is read as the trust placed in R's owner and R as the recommended opinion.
// Using a representation as T therefore treats that representation's opinion
// about the information need as trust in the other representation.

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "polyrep/extractor.hpp"
#include "polyrep/opinion.hpp"
#include "polyrep/topic.hpp"

namespace polyrep {

inline constexpr std::size_t kMaxPlanDepth = 64;

enum class PlanKind { RepRef, Literal, Consensus, Recommend };

struct SourceSpan {
    std::size_t begin = 0;  // 0-based byte offset
    std::size_t end = 0;    // one past the last byte
};

class PlanExpr {
public:
    static PlanExpr rep(int index, SourceSpan span = {});
    // Throws ConstraintViolation when the components do not form an opinion.
    static PlanExpr literal(double b, double d, double u, double a, SourceSpan span = {});
    static PlanExpr consensus(PlanExpr left, PlanExpr right, SourceSpan span = {});
    static PlanExpr recommend(PlanExpr trust, PlanExpr rec, SourceSpan span = {});

    PlanKind kind() const noexcept { return node_->kind; }
    int rep_index() const noexcept { return node_->rep_index; }
    // b, d, u, a of a Literal.
    const std::array<double, 4>& literal_values() const noexcept { return node_->literal; }
    const PlanExpr& left() const { return *node_->left; }
    const PlanExpr& right() const { return *node_->right; }
    SourceSpan span() const noexcept { return node_->span; }

    std::size_t node_count() const noexcept { return node_->count; }
    std::size_t depth() const noexcept { return node_->depth; }

    // Structural equality; spans are ignored.
    friend bool operator==(const PlanExpr& a, const PlanExpr& b);

private:
    struct Node {
        PlanKind kind = PlanKind::RepRef;
        int rep_index = 0;
        std::array<double, 4> literal{};
        std::unique_ptr<PlanExpr> left;
        std::unique_ptr<PlanExpr> right;
        SourceSpan span;
        std::size_t count = 1;
        std::size_t depth = 1;
    };
    explicit PlanExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static PlanExpr binary(PlanKind kind, PlanExpr l, PlanExpr r, SourceSpan span);

    std::shared_ptr<const Node> node_;
};

// Throws ParseError with a 1-based byte offset and the set of tokens that
// would have been accepted there.
PlanExpr parse_plan(std::string_view source);

// Canonical function-call form, e.g. "consensus(recommend(rep2, rep4), rep5)".
// Literal components are printed in shortest round-trip form.
std::string pretty_print(const PlanExpr& plan);

struct TraceEntry {
    std::size_t node = 0;               // post-order index
    PlanKind kind = PlanKind::RepRef;
    std::vector<std::size_t> operands;  // indices of earlier entries
    std::string expression;             // pretty-printed subtree
    Opinion result;
};

struct Evaluation {
    Opinion result;
    std::vector<TraceEntry> trace;  // one entry per plan node, post-order
};

// Evaluates bottom-up. Fusion failures surface as PlanEvaluationError carrying
// the failing subtree's span.
Evaluation evaluate_plan_traced(const PlanExpr& plan, const Topic& topic,
                                const ExtractorSet& extractors, double base_rate = 0.5);
Opinion evaluate_plan(const PlanExpr& plan, const Topic& topic, const ExtractorSet& extractors,
                      double base_rate = 0.5);

const char* to_string(PlanKind kind) noexcept;

struct Scenario {
    std::string name;
    std::string source;
    PlanExpr plan;
};

// Scenario config: one "name = <plan>" per line; '#' starts a comment.
// Throws ParseError (message carries the line number) or ConfigError for
// malformed lines and duplicate names.
std::vector<Scenario> parse_scenarios(std::string_view text);
// nullptr when absent.
const Scenario* find_scenario(const std::vector<Scenario>& scenarios, std::string_view name);

}  // namespace polyrep
