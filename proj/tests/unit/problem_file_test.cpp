#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "example.hpp"
#include "invheat/errors.hpp"
#include "invheat/problem/problem.hpp"

using namespace invheat;
using namespace invheat::problem;

TEST(ProblemFile, BundledExampleLoads) {
    const auto& p = invheat::testing::paper_example();
    EXPECT_NEAR(p.energy(0.0), 0.159155, 1e-6);
    EXPECT_DOUBLE_EQ(p.horizon, 0.25);
    ASSERT_TRUE(p.has_exact());
    EXPECT_NEAR((*p.exact_a)(0.1), invheat::testing::example_a(0.1), 1e-14);
    EXPECT_NEAR((*p.exact_u)(0.3, 0.2), invheat::testing::example_u(0.3, 0.2), 1e-14);
    EXPECT_NEAR(p.phi(0.25), 0.75, 1e-15);
}

TEST(ProblemFile, SyntaxErrorReportsLineAndOffset) {
    try {
        parse_problem("phi = sin(\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.offset(), 10u);
    }
    try {
        parse_problem("# header\nphi = x\nF = 0\nE = 1 +\nT = 1\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
    }
}

TEST(ProblemFile, MissingKeyRejected) {
    EXPECT_THROW(parse_problem("phi = x\nF = 0\nT = 1\n"), ParseError);
}

TEST(ProblemFile, NonPositiveHorizonRejected) {
    EXPECT_THROW(parse_problem("phi = x\nF = 0\nE = 1\nT = 0\n"), ParseError);
    EXPECT_THROW(parse_problem("phi = x\nF = 0\nE = 1\nT = -1/4\n"), ParseError);
}

TEST(ProblemFile, UnknownIdentifierAndKeyRejected) {
    EXPECT_THROW(parse_problem("phi = y\nF = 0\nE = 1\nT = 1\n"), ParseError);
    EXPECT_THROW(parse_problem("phi = t\nF = 0\nE = 1\nT = 1\n"), ParseError);
    EXPECT_THROW(parse_problem("phi = x\nF = 0\nE = 1\nT = 1\nG = 2\n"), ParseError);
    EXPECT_THROW(parse_problem("phi = x\nphi = x\nF = 0\nE = 1\nT = 1\n"), ParseError);
}

TEST(ProblemFile, MissingFileRaisesParseError) {
    EXPECT_THROW(load_problem("/nonexistent/problem.prob"), ParseError);
}

TEST(ProblemFile, FormatRoundTrip) {
    const auto& p = invheat::testing::paper_example();
    const auto q = parse_problem(format_problem(p));
    for (double x : {0.0, 0.2, 0.7}) {
        for (double t : {0.0, 0.1, 0.25}) {
            EXPECT_NEAR(q.source(x, t), p.source(x, t), 1e-12);
            EXPECT_NEAR((*q.exact_u)(x, t), (*p.exact_u)(x, t), 1e-14);
        }
        EXPECT_NEAR(q.phi(x), p.phi(x), 1e-15);
    }
    EXPECT_EQ(q.horizon, p.horizon);
}
