#include <gtest/gtest.h>

#include "polyrep/error.hpp"
#include "polyrep/fusion.hpp"
#include "polyrep/plan.hpp"
#include "test_support.hpp"

namespace polyrep {
namespace {

Topic sample_topic() {
    return Topic::make("001", {"looking for manipulation of nano spheres and peptide nano particles",
                               "master thesis on peptide nano spheres with gold and iron on a chip",
                               "background is limited, worked with blood cells",
                               "an ideal answer would show how to manipulate peptide nano spheres",
                               "Manipulation, nano spheres, peptides, immobilisation."});
}

ExtractorSet extractors() {
    auto lexicon = std::make_shared<Lexicon>(Lexicon::parse("bill\t10\nchip\t9\ncells\t7\nspheres\t4\n"));
    auto stopwords = std::make_shared<StopwordList>(StopwordList::parse("a\nand\nof\non\nthe\nwith\n"));
    ExtractorSet set;
    for (int i = 1; i <= 5; ++i) set.set(i, std::make_shared<LexicalExtractor>(lexicon, stopwords));
    return set;
}

ParseError parse_error(std::string_view src) {
    try {
        parse_plan(src);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no parse error for '" << src << "'";
    return ParseError(0, {}, "");
}

TEST(ParsePlan, FunctionForm) {
    const PlanExpr p = parse_plan("consensus(rep1, rep5)");
    EXPECT_EQ(p, PlanExpr::consensus(PlanExpr::rep(1), PlanExpr::rep(5)));
    EXPECT_EQ(p.node_count(), 3u);
    EXPECT_EQ(p.span().begin, 0u);
    EXPECT_EQ(p.span().end, 21u);
}

TEST(ParsePlan, InfixPrecedence) {
    EXPECT_EQ(parse_plan("rep2 (x) rep4 (+) rep5"),
              PlanExpr::consensus(PlanExpr::recommend(PlanExpr::rep(2), PlanExpr::rep(4)),
                                  PlanExpr::rep(5)));
    EXPECT_EQ(parse_plan("rep5 (+) rep2 (x) rep4"),
              PlanExpr::consensus(PlanExpr::rep(5),
                                  PlanExpr::recommend(PlanExpr::rep(2), PlanExpr::rep(4))));
    // Left associativity.
    EXPECT_EQ(parse_plan("rep1 (+) rep2 (+) rep3"),
              PlanExpr::consensus(PlanExpr::consensus(PlanExpr::rep(1), PlanExpr::rep(2)),
                                  PlanExpr::rep(3)));
    EXPECT_EQ(parse_plan("rep1 (x) rep2 (x) rep3"),
              PlanExpr::recommend(PlanExpr::recommend(PlanExpr::rep(1), PlanExpr::rep(2)),
                                  PlanExpr::rep(3)));
}

TEST(ParsePlan, WhitespaceAndLiterals) {
    EXPECT_EQ(parse_plan("  recommend (\topinion(1,0,0,0.5) ,\nrep4 )  "),
              PlanExpr::recommend(PlanExpr::literal(1, 0, 0, 0.5), PlanExpr::rep(4)));
    EXPECT_EQ(parse_plan("opinion(2.5e-1, 0.25, .5, 1)").literal_values(),
              (std::array<double, 4>{0.25, 0.25, 0.5, 1.0}));
}

TEST(ParsePlan, UnbalancedParenthesis) {
    const ParseError e = parse_error("consensus(rep1");
    EXPECT_EQ(e.offset(), 15u);  // one past the last of 14 bytes
    EXPECT_EQ(e.expected(), (std::vector<std::string>{"(+)", "(x)", ","}));
    EXPECT_NE(std::string(e.what()).find("offset 15"), std::string::npos);
}

TEST(ParsePlan, ErrorOffsets) {
    EXPECT_EQ(parse_error("").offset(), 1u);
    EXPECT_EQ(parse_error("rep6").offset(), 4u);
    EXPECT_EQ(parse_error("rep").offset(), 4u);
    EXPECT_EQ(parse_error("rep12").offset(), 1u);
    EXPECT_EQ(parse_error("rep1 rep2").offset(), 6u);
    EXPECT_EQ(parse_error("rep1 (+)").offset(), 9u);
    EXPECT_EQ(parse_error("consensus rep1").offset(), 11u);
    EXPECT_EQ(parse_error("merge(rep1, rep2)").offset(), 1u);
    EXPECT_EQ(parse_error("consensus(rep1, rep2").offset(), 21u);
    EXPECT_EQ(parse_error("opinion(0.5, 0.5, 0.5, 0.5)").offset(), 1u);
    EXPECT_EQ(parse_error("opinion(0.5, x, 0.5, 0.5)").offset(), 14u);
    EXPECT_EQ(parse_error("consensus(rep1, rep2))").offset(), 22u);
}

TEST(ParsePlan, DepthCap) {
    std::string deep = "rep1";
    for (std::size_t i = 1; i < kMaxPlanDepth; ++i) deep = "consensus(" + deep + ", rep2)";
    EXPECT_EQ(parse_plan(deep).depth(), kMaxPlanDepth);
    EXPECT_THROW(parse_plan("consensus(" + deep + ", rep2)"), ParseError);

    std::string chain = "rep1";
    for (std::size_t i = 0; i < kMaxPlanDepth; ++i) chain += " (+) rep2";
    EXPECT_THROW(parse_plan(chain), ParseError);

    std::string nested(10000, '(');
    EXPECT_THROW(parse_plan(nested), ParseError);
    std::string calls;
    for (int i = 0; i < 10000; ++i) calls += "consensus(";
    EXPECT_THROW(parse_plan(calls), ParseError);
}

// Random AST generator for the pretty-print round trip.
PlanExpr random_plan(testing::Gen& gen, int depth) {
    const int pick = depth <= 0 ? gen.integer(0, 1) : gen.integer(0, 3);
    switch (pick) {
        case 0:
            return PlanExpr::rep(gen.integer(1, 5));
        case 1: {
            const Opinion op = gen.any_opinion("L", "p");
            return PlanExpr::literal(op.belief(), op.disbelief(), op.uncertainty(), op.base_rate());
        }
        case 2:
            return PlanExpr::consensus(random_plan(gen, depth - 1), random_plan(gen, depth - 1));
        default:
            return PlanExpr::recommend(random_plan(gen, depth - 1), random_plan(gen, depth - 1));
    }
}

TEST(PrettyPrint, RoundTrip) {
    testing::Gen gen(59);
    for (int i = 0; i < 2000; ++i) {
        const PlanExpr plan = random_plan(gen, 5);
        const std::string text = pretty_print(plan);
        ASSERT_EQ(parse_plan(text), plan) << text;
        ASSERT_EQ(pretty_print(parse_plan(text)), text);
    }
    EXPECT_EQ(pretty_print(parse_plan("rep2 (x) rep4 (+) rep5")),
              "consensus(recommend(rep2, rep4), rep5)");
}

TEST(EvaluatePlan, SingleNodeIsRepresentationOpinion) {
    const Topic t = sample_topic();
    const auto ex = extractors();
    const Opinion direct = representation_opinion(t, 5, ex, 0.5);
    const Opinion planned = evaluate_plan(parse_plan("rep5"), t, ex, 0.5);
    EXPECT_EQ(planned.belief(), direct.belief());
    EXPECT_EQ(planned.disbelief(), direct.disbelief());
    EXPECT_EQ(planned.uncertainty(), direct.uncertainty());
    EXPECT_EQ(planned.owner(), "rep5@001");
}

TEST(EvaluatePlan, VacuousLiteralIsNeutral) {
    const Topic t = sample_topic();
    const auto ex = extractors();
    const Opinion rep5 = evaluate_plan(parse_plan("rep5"), t, ex);
    const Opinion fused = evaluate_plan(parse_plan("consensus(rep5, opinion(0,0,1,0.5))"), t, ex);
    EXPECT_LE(testing::bdu_gap(fused, rep5), 1e-12);
}

TEST(EvaluatePlan, FullTrustLiteralIsIdentity) {
    const Topic t = sample_topic();
    const auto ex = extractors();
    const Opinion rep4 = evaluate_plan(parse_plan("rep4"), t, ex);
    const Opinion out = evaluate_plan(parse_plan("recommend(opinion(1,0,0,0.5), rep4)"), t, ex);
    EXPECT_LE(testing::bdu_gap(out, rep4), 1e-12);
    EXPECT_NEAR(out.base_rate(), rep4.base_rate(), 1e-12);
}

TEST(EvaluatePlan, RecommendUsesLeftAsTrust) {
    const Topic t = sample_topic();
    const auto ex = extractors();
    const Opinion rep2 = representation_opinion(t, 2, ex);
    const Opinion rep4 = representation_opinion(t, 4, ex);
    const Opinion expected = recommend(as_trust_in(rep2, rep4.owner()), rep4);
    const Opinion out = evaluate_plan(parse_plan("rep2 (x) rep4"), t, ex);
    EXPECT_EQ(out.belief(), expected.belief());
    EXPECT_EQ(out.uncertainty(), expected.uncertainty());
    EXPECT_EQ(out.owner(), "rep2@001;rep4@001");
    EXPECT_NEAR(out.belief(), rep2.belief() * rep4.belief(), 1e-12);
}

TEST(EvaluatePlan, TraceHasOneEntryPerNode) {
    const Topic t = sample_topic();
    const auto ex = extractors();
    const PlanExpr plan = parse_plan("rep1 (+) rep5 (+) opinion(0.5, 0, 0.5, 0.5) (x) rep3");
    const Evaluation ev = evaluate_plan_traced(plan, t, ex);
    ASSERT_EQ(ev.trace.size(), plan.node_count());
    EXPECT_EQ(ev.trace.back().expression, pretty_print(plan));
    EXPECT_EQ(ev.trace.back().result.belief(), ev.result.belief());
    for (const auto& entry : ev.trace) {
        for (std::size_t operand : entry.operands) EXPECT_LT(operand, entry.node);
    }
    EXPECT_EQ(ev.trace[3].kind, PlanKind::Literal);
    EXPECT_EQ(ev.trace[5].operands, (std::vector<std::size_t>{3, 4}));
}

TEST(EvaluatePlan, CommutativeDeterministicAndNormalized) {
    const Topic t = sample_topic();
    const auto ex = extractors();
    testing::Gen gen(61);
    for (int i = 0; i < 300; ++i) {
        const PlanExpr x = random_plan(gen, 3);
        const PlanExpr y = random_plan(gen, 3);
        Opinion xy, yx;
        try {
            xy = evaluate_plan(PlanExpr::consensus(x, y), t, ex);
            yx = evaluate_plan(PlanExpr::consensus(y, x), t, ex);
        } catch (const PlanEvaluationError& e) {
            ASSERT_EQ(e.kind(), FusionErrorKind::BothDogmatic);
            continue;
        }
        ASSERT_LE(testing::bdu_gap(xy, yx), 1e-12);
        ASSERT_NEAR(xy.belief() + xy.disbelief() + xy.uncertainty(), 1.0, 1e-9);
        const Opinion again = evaluate_plan(PlanExpr::consensus(x, y), t, ex);
        ASSERT_EQ(again.belief(), xy.belief());
        ASSERT_EQ(again.disbelief(), xy.disbelief());
        ASSERT_EQ(again.uncertainty(), xy.uncertainty());
        ASSERT_EQ(again.base_rate(), xy.base_rate());
    }
}

TEST(EvaluatePlan, DogmaticConsensusReportsSpan) {
    const Topic t = sample_topic();
    const std::string src = "rep1 (+) consensus(opinion(1,0,0,0.5), opinion(0,1,0,0.5))";
    try {
        evaluate_plan(parse_plan(src), t, extractors());
        FAIL();
    } catch (const PlanEvaluationError& e) {
        EXPECT_EQ(e.kind(), FusionErrorKind::BothDogmatic);
        EXPECT_EQ(src.substr(e.span_begin(), e.span_end() - e.span_begin()),
                  "consensus(opinion(1,0,0,0.5), opinion(0,1,0,0.5))");
    }
}

TEST(Scenarios, ParseConfig) {
    const auto scenarios = parse_scenarios(
        "# comment\n\nadhoc = consensus(rep1, rep5)  # trailing\ncontext=rep2 (x) rep4\n");
    ASSERT_EQ(scenarios.size(), 2u);
    EXPECT_EQ(scenarios[0].name, "adhoc");
    EXPECT_EQ(scenarios[1].plan, parse_plan("recommend(rep2, rep4)"));
    EXPECT_NE(find_scenario(scenarios, "context"), nullptr);
    EXPECT_EQ(find_scenario(scenarios, "missing"), nullptr);

    EXPECT_THROW(parse_scenarios("a = rep1\na = rep2\n"), ConfigError);
    EXPECT_THROW(parse_scenarios("just words\n"), ConfigError);
    EXPECT_THROW(parse_scenarios("bad name = rep1\n"), ConfigError);
    try {
        parse_scenarios("ok = rep1\nbroken = consensus(rep1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

}  // namespace
}  // namespace polyrep
