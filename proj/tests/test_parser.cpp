#include <gtest/gtest.h>

#include "corpus.hpp"
#include "error_matchers.hpp"
#include "latgreen/operator_parser.hpp"
#include "support.hpp"

using namespace latgreen;

namespace {

std::string error_text(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST(Parser, Laplacian)
{
    EXPECT_EQ(parse_operator("1 - 1/4*(z1 + 1/z1 + z2 + 1/z2)", 2), DifferenceOperator::laplacian(2));
}

TEST(Parser, ForwardDifference)
{
    EXPECT_EQ(parse_operator("z1 - 1", 1), DifferenceOperator::forward_difference(1));
}

TEST(Parser, ZeroOperator)
{
    EXPECT_ERROR_KIND(parse_operator("z1 - z1", 1), ErrorKind::ZeroOperator);
    EXPECT_ERROR_KIND(parse_operator("0", 2), ErrorKind::ZeroOperator);
}

TEST(Parser, Grammar)
{
    const auto z1 = LaurentPolynomial::variable(2, 0);
    const auto z2 = LaurentPolynomial::variable(2, 1);
    EXPECT_EQ(parse_laurent("z1*z2", 2), z1 * z2);
    EXPECT_EQ(parse_laurent("-z1 + 3/6", 2), LaurentPolynomial::constant(2, Rational(1, 2)) - z1);
    EXPECT_EQ(parse_laurent("2*(z1 - z2)*(z1 + z2)", 2), Rational(2) * (z1 * z1 - z2 * z2));
    EXPECT_EQ(parse_laurent("z1^3*1/z2^2", 2), z1.pow(3) * LaurentPolynomial::variable(2, 1, -2));
    EXPECT_EQ(parse_laurent("z1^-1", 2), LaurentPolynomial::variable(2, 0, -1));
    EXPECT_EQ(parse_laurent(" 1\n - z2 ", 2), LaurentPolynomial::constant(2, 1) - z2);
}

TEST(Parser, IndexOutOfRange)
{
    EXPECT_ERROR_KIND(parse_operator("z3 - 1", 2), ErrorKind::IndexOutOfRange);
    EXPECT_ERROR_KIND(parse_operator("z0 - 1", 2), ErrorKind::IndexOutOfRange);
}

TEST(Parser, SyntaxErrorsCarryPosition)
{
    EXPECT_ERROR_KIND(parse_operator("z1 +", 1), ErrorKind::SyntaxError);
    EXPECT_ERROR_KIND(parse_operator("(z1 - 1", 1), ErrorKind::SyntaxError);
    EXPECT_ERROR_KIND(parse_operator("z1 ** 2", 1), ErrorKind::SyntaxError);
    EXPECT_ERROR_KIND(parse_operator("1/0", 1), ErrorKind::SyntaxError);
    EXPECT_ERROR_KIND(parse_operator("y1", 1), ErrorKind::SyntaxError);
    const auto message = error_text([] { parse_operator("z1 -\n  * 2", 1); });
    EXPECT_NE(message.find("line 2, column 3"), std::string::npos) << message;
}

TEST(Parser, InferNumVars)
{
    EXPECT_EQ(infer_num_vars("z1 - 1"), 1u);
    EXPECT_EQ(infer_num_vars("1 - 1/6*(z1 + 1/z3)"), 3u);
    EXPECT_EQ(infer_num_vars("5"), 1u);
}

TEST(Parser, JsonForm)
{
    const auto op = parse_operator_json(R"([{"alpha": [1], "coeff": 1}, {"alpha": [0], "coeff": "-1"}])");
    EXPECT_EQ(op, DifferenceOperator::forward_difference(1));
    const auto lap = parse_operator_json(R"({"terms": [{"alpha": [0, 0], "coeff": "1"},
        {"alpha": [1, 0], "coeff": "-1/4"}, {"alpha": [-1, 0], "coeff": "-1/4"},
        {"alpha": [0, 1], "coeff": "-1/4"}, {"alpha": [0, -1], "coeff": "-1/4"}]})");
    EXPECT_EQ(lap, DifferenceOperator::laplacian(2));
    EXPECT_ERROR_KIND(parse_operator_json("[{\"alpha\": [1, 2], \"coeff\": 1}]", 1), ErrorKind::ArityMismatch);
    EXPECT_ERROR_KIND(parse_operator_json("[", 1), ErrorKind::SyntaxError);
    EXPECT_ERROR_KIND(parse_operator_json("[{\"alpha\": [1], \"coeff\": 1.5}]"), ErrorKind::SyntaxError);
    EXPECT_ERROR_KIND(parse_operator_json("[{\"alpha\": [1], \"coeff\": 0}]"), ErrorKind::ZeroOperator);
}

TEST(Parser, CorpusRoundTrip)
{
    const auto corpus = load_operator_corpus(LATGREEN_TEST_DATA "/operators.txt");
    ASSERT_GE(corpus.size(), 10u);
    for (const auto& [n, text] : corpus) {
        const auto op = parse_operator(text, n);
        const auto canonical = serialize_operator(op);
        const auto again = parse_operator(canonical, n);
        EXPECT_EQ(again, op) << text;
        EXPECT_EQ(serialize_operator(again), canonical);
    }
}

TEST(ParserProperty, RandomRoundTrip)
{
    testkit::Rng rng(81);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const auto op = testkit::random_operator(rng, n, 3, 1000);
        EXPECT_EQ(parse_operator(serialize_operator(op), n), op);
    }
}
