#include "latgreen/laurent_polynomial.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "latgreen/error.hpp"

namespace latgreen {

LaurentPolynomial::LaurentPolynomial(std::size_t num_vars) : num_vars_(num_vars)
{
    if (num_vars == 0)
        raise(ErrorKind::InvalidArity, "a polynomial needs at least one variable");
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t num_vars, const Rational& c)
{
    LaurentPolynomial p(num_vars);
    p.add_term(ExponentVector(num_vars), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const ExponentVector& exponent, const Rational& c)
{
    LaurentPolynomial p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t num_vars, std::size_t i, int power)
{
    if (i >= num_vars)
        raise(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(i + 1) + " exceeds "
                                              + std::to_string(num_vars));
    return monomial(ExponentVector::unit(num_vars, i, power));
}

bool LaurentPolynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

bool LaurentPolynomial::is_ordinary() const
{
    for (const auto& [e, c] : terms_)
        for (int x : e.entries())
            if (x < 0)
                return false;
    return true;
}

bool LaurentPolynomial::involves(std::size_t v) const
{
    return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] != 0; });
}

Rational LaurentPolynomial::coefficient(const ExponentVector& exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational() : it->second;
}

Rational LaurentPolynomial::constant_term() const
{
    return coefficient(ExponentVector(num_vars_));
}

const std::pair<const ExponentVector, Rational>& LaurentPolynomial::leading_term() const
{
    if (terms_.empty())
        raise(ErrorKind::ZeroPolynomial, "leading term of the zero polynomial");
    return *terms_.rbegin();
}

void LaurentPolynomial::add_term(const ExponentVector& exponent, const Rational& c)
{
    if (exponent.size() != num_vars_)
        raise(ErrorKind::ArityMismatch, "exponent " + exponent.str() + " in a polynomial of "
                                            + std::to_string(num_vars_) + " variables");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

ExponentVector LaurentPolynomial::min_exponents() const
{
    ExponentVector m(num_vars_);
    if (terms_.empty())
        return m;
    for (std::size_t i = 0; i < num_vars_; ++i)
        m[i] = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < num_vars_; ++i)
            m[i] = std::min(m[i], e[i]);
    return m;
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& shift) const
{
    if (shift.size() != num_vars_)
        raise(ErrorKind::ArityMismatch, "shift " + shift.str() + " for a polynomial of "
                                            + std::to_string(num_vars_) + " variables");
    LaurentPolynomial r(num_vars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), e + shift, c);
    return r;
}

void LaurentPolynomial::require_same_arity(const LaurentPolynomial& other) const
{
    if (other.num_vars_ != num_vars_)
        raise(ErrorKind::ArityMismatch, "polynomials in " + std::to_string(num_vars_) + " and "
                                            + std::to_string(other.num_vars_) + " variables");
}

LaurentPolynomial LaurentPolynomial::operator-() const
{
    LaurentPolynomial r(*this);
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs)
{
    require_same_arity(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs)
{
    require_same_arity(rhs);
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b)
{
    a.require_same_arity(b);
    LaurentPolynomial r(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_)
        x *= c;
    return *this;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const
{
    LaurentPolynomial result = constant(num_vars_, 1);
    LaurentPolynomial base = *this;
    while (exponent) {
        if (exponent & 1U)
            result *= base;
        exponent >>= 1U;
        if (exponent)
            base *= base;
    }
    return result;
}

namespace {

std::string monomial_text(const ExponentVector& e, const std::string& prefix)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        if (e[i] < 0)
            s += "1/";
        s += prefix + std::to_string(i + 1);
        const int a = e[i] < 0 ? -e[i] : e[i];
        if (a != 1)
            s += '^' + std::to_string(a);
    }
    return s;
}

} // namespace

std::string LaurentPolynomial::str(const std::string& var_prefix) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c.sign() < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        const Rational mag = c.abs();
        const std::string mono = monomial_text(e, var_prefix);
        if (mono.empty())
            out += mag.str();
        else if (mag.is_one())
            out += mono;
        else
            out += mag.str() + "*" + mono;
    }
    return out;
}

LaurentPolynomial lp_arith(const LaurentPolynomial& p, const LaurentPolynomial& q, RingOp kind)
{
    switch (kind) {
    case RingOp::Add: return p + q;
    case RingOp::Sub: return p - q;
    case RingOp::Mul: return p * q;
    }
    raise(ErrorKind::InvalidArgument, "unknown ring operation");
}

LaurentPolynomial mirror(const LaurentPolynomial& p)
{
    LaurentPolynomial r(p.num_vars());
    for (const auto& [e, c] : p.terms())
        r.add_term(-e, c);
    return r;
}

std::pair<int, int> degree_range(const LaurentPolynomial& p, std::size_t v)
{
    if (p.is_zero())
        raise(ErrorKind::ZeroPolynomial, "degree range of the zero polynomial");
    if (v >= p.num_vars())
        raise(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(v + 1));
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const auto& [e, c] : p.terms()) {
        lo = std::min(lo, e[v]);
        hi = std::max(hi, e[v]);
    }
    return {lo, hi};
}

LaurentPolynomial coefficient_of(const LaurentPolynomial& p, std::size_t v, int k)
{
    if (v >= p.num_vars())
        raise(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(v + 1));
    LaurentPolynomial r(p.num_vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != k)
            continue;
        ExponentVector stripped = e;
        stripped[v] = 0;
        r.add_term(stripped, c);
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p)
{
    return os << p.str();
}

} // namespace latgreen
