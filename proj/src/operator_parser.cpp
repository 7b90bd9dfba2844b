#include "latgreen/operator_parser.hpp"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "latgreen/error.hpp"

namespace latgreen {

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, std::size_t num_vars) : text_(text), num_vars_(num_vars) {}

    LaurentPolynomial parse()
    {
        LaurentPolynomial p = expr();
        skip_space();
        if (!at_end())
            fail("unexpected '" + std::string(1, peek()) + "'");
        return p;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    [[noreturn]] void fail(const std::string& message) const
    {
        raise(ErrorKind::SyntaxError,
              "line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + message);
    }

    std::string found() const
    {
        return at_end() ? "end of input" : "'" + std::string(1, peek()) + "'";
    }

    mpz_class integer()
    {
        if (!is_digit(peek()))
            fail("expected a number, found " + found());
        std::string digits;
        while (is_digit(peek())) {
            digits += peek();
            advance();
        }
        return mpz_class(digits, 10);
    }

    LaurentPolynomial expr()
    {
        skip_space();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            advance();
        }
        LaurentPolynomial sum = term();
        if (negate)
            sum = -sum;
        while (true) {
            skip_space();
            if (peek() != '+' && peek() != '-')
                return sum;
            const bool minus = peek() == '-';
            advance();
            LaurentPolynomial t = term();
            if (minus)
                sum -= t;
            else
                sum += t;
        }
    }

    LaurentPolynomial term()
    {
        LaurentPolynomial product = factor();
        while (true) {
            skip_space();
            if (peek() != '*')
                return product;
            advance();
            product *= factor();
        }
    }

    // After 'z' (or "1/z"): index and optional exponent.
    LaurentPolynomial variable_power(int sign)
    {
        const std::size_t line = line_;
        const std::size_t column = column_;
        if (!is_digit(peek()))
            fail("expected a variable index after 'z', found " + found());
        const mpz_class index = integer();
        if (index < 1 || index > static_cast<unsigned long>(num_vars_))
            raise(ErrorKind::IndexOutOfRange, "line " + std::to_string(line) + ", column " + std::to_string(column)
                                                  + ": variable z" + index.get_str() + " outside z1..z"
                                                  + std::to_string(num_vars_));
        long power = 1;
        skip_space();
        if (peek() == '^') {
            advance();
            skip_space();
            long exponent_sign = 1;
            if (peek() == '-') {
                exponent_sign = -1;
                advance();
            }
            const mpz_class e = integer();
            if (!e.fits_sint_p() || e > 1000000)
                fail("exponent too large");
            power = exponent_sign * e.get_si();
        }
        return LaurentPolynomial::variable(num_vars_, index.get_ui() - 1, static_cast<int>(sign * power));
    }

    LaurentPolynomial factor()
    {
        skip_space();
        const char c = peek();
        if (c == 'z') {
            advance();
            return variable_power(1);
        }
        if (c == '(') {
            advance();
            LaurentPolynomial inner = expr();
            skip_space();
            if (peek() != ')')
                fail("expected ')', found " + found());
            advance();
            return inner;
        }
        if (is_digit(c)) {
            const mpz_class numerator = integer();
            skip_space();
            if (peek() != '/')
                return LaurentPolynomial::constant(num_vars_, Rational(numerator));
            advance();
            skip_space();
            if (peek() == 'z') {
                if (numerator != 1)
                    fail("only '1/z' may divide by a variable");
                advance();
                return variable_power(-1);
            }
            const mpz_class denominator = integer();
            if (denominator == 0)
                fail("zero denominator");
            return LaurentPolynomial::constant(num_vars_, Rational(numerator, denominator));
        }
        fail("expected a term, found " + found());
    }

    std::string_view text_;
    std::size_t num_vars_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

} // namespace

LaurentPolynomial parse_laurent(std::string_view text, std::size_t num_vars)
{
    if (num_vars == 0)
        raise(ErrorKind::InvalidArity, "the number of variables must be positive");
    return ExpressionParser(text, num_vars).parse();
}

DifferenceOperator parse_operator(std::string_view text, std::size_t num_vars)
{
    LaurentPolynomial p = parse_laurent(text, num_vars);
    if (p.is_zero())
        raise(ErrorKind::ZeroOperator, "'" + std::string(text) + "' simplifies to 0");
    return DifferenceOperator::from_symbol(p);
}

DifferenceOperator parse_operator_json(std::string_view json_text, std::size_t num_vars)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        raise(ErrorKind::SyntaxError, std::string("operator JSON: ") + e.what());
    }
    if (doc.is_object() && doc.contains("terms"))
        doc = doc["terms"];
    if (!doc.is_array() || doc.empty())
        raise(ErrorKind::SyntaxError, "operator JSON must be a non-empty list of {\"alpha\", \"coeff\"} objects");

    std::vector<DifferenceOperator::Term> terms;
    for (const auto& item : doc) {
        if (!item.is_object() || !item.contains("alpha") || !item.contains("coeff") || !item["alpha"].is_array())
            raise(ErrorKind::SyntaxError, "operator JSON term needs \"alpha\" (list) and \"coeff\"");
        std::vector<int> alpha;
        for (const auto& a : item["alpha"]) {
            if (!a.is_number_integer())
                raise(ErrorKind::SyntaxError, "alpha entries must be integers");
            alpha.push_back(a.get<int>());
        }
        if (num_vars == 0)
            num_vars = alpha.size();
        if (alpha.size() != num_vars)
            raise(ErrorKind::ArityMismatch, "alpha of length " + std::to_string(alpha.size()) + ", expected "
                                                + std::to_string(num_vars));
        const auto& coeff = item["coeff"];
        Rational c;
        if (coeff.is_string())
            c = Rational::parse(coeff.get<std::string>());
        else if (coeff.is_number_integer())
            c = Rational(coeff.get<long>());
        else
            raise(ErrorKind::SyntaxError, "coeff must be an integer or a \"p/q\" string");
        terms.emplace_back(ExponentVector(std::move(alpha)), c);
    }
    if (num_vars == 0)
        raise(ErrorKind::InvalidArity, "operator JSON with empty alpha");
    return DifferenceOperator(num_vars, terms);
}

std::size_t infer_num_vars(std::string_view text)
{
    std::size_t best = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != 'z')
            continue;
        std::size_t j = i + 1;
        std::size_t index = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && index < 100000)
            index = index * 10 + static_cast<std::size_t>(text[j++] - '0');
        best = std::max(best, index);
    }
    return best;
}

std::string serialize_operator(const DifferenceOperator& op)
{
    return symbol(op).str("z");
}

} // namespace latgreen
