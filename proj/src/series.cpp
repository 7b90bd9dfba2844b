#include "latgreen/series.hpp"

#include <algorithm>
#include <numeric>

#include "directed_inverse.hpp"
#include "latgreen/error.hpp"

namespace latgreen {

char to_char(Direction d) noexcept
{
    return d == Direction::Positive ? '+' : '-';
}

// ---------------------------------------------------------------------------
// ExpansionSignature

ExpansionSignature::ExpansionSignature(std::vector<std::size_t> order, std::vector<Direction> directions)
    : order_(std::move(order)), directions_(std::move(directions))
{
    const std::size_t n = order_.size();
    if (n == 0)
        raise(ErrorKind::InvalidArity, "a signature needs at least one variable");
    if (directions_.size() != n)
        raise(ErrorKind::ArityMismatch, "signature has " + std::to_string(n) + " variables but "
                                            + std::to_string(directions_.size()) + " directions");
    std::vector<bool> seen(n, false);
    for (std::size_t v : order_) {
        if (v >= n || seen[v])
            raise(ErrorKind::InvalidArgument, "signature order is not a permutation of 1.." + std::to_string(n));
        seen[v] = true;
    }
}

ExpansionSignature ExpansionSignature::standard(std::size_t n)
{
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return ExpansionSignature(std::move(order), std::vector<Direction>(n, Direction::Positive));
}

ExpansionSignature ExpansionSignature::parse(std::string_view text)
{
    const auto semi = text.find(';');
    if (semi == std::string_view::npos)
        raise(ErrorKind::InvalidArgument, "signature '" + std::string(text) + "' lacks ';'");

    auto split = [](std::string_view s) {
        std::vector<std::string_view> parts;
        std::size_t start = 0;
        while (true) {
            const auto comma = s.find(',', start);
            auto part = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            while (!part.empty() && part.front() == ' ')
                part.remove_prefix(1);
            while (!part.empty() && part.back() == ' ')
                part.remove_suffix(1);
            parts.push_back(part);
            if (comma == std::string_view::npos)
                return parts;
            start = comma + 1;
        }
    };

    std::vector<std::size_t> order;
    for (auto part : split(text.substr(0, semi))) {
        std::size_t index = 0;
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) { return c >= '0' && c <= '9'; }))
            raise(ErrorKind::InvalidArgument, "bad variable index '" + std::string(part) + "' in signature");
        for (char c : part)
            index = index * 10 + static_cast<std::size_t>(c - '0');
        if (index == 0)
            raise(ErrorKind::InvalidArgument, "signature variable indices start at 1");
        order.push_back(index - 1);
    }
    std::vector<Direction> directions;
    for (auto part : split(text.substr(semi + 1))) {
        if (part == "+")
            directions.push_back(Direction::Positive);
        else if (part == "-")
            directions.push_back(Direction::Negative);
        else
            raise(ErrorKind::InvalidArgument, "bad direction '" + std::string(part) + "' in signature");
    }
    return ExpansionSignature(std::move(order), std::move(directions));
}

std::string ExpansionSignature::str() const
{
    std::string s;
    for (std::size_t i = 0; i < order_.size(); ++i)
        s += (i ? "," : "") + std::to_string(order_[i] + 1);
    s += ';';
    for (std::size_t i = 0; i < directions_.size(); ++i) {
        if (i)
            s += ',';
        s += to_char(directions_[i]);
    }
    return s;
}

std::vector<ExpansionSignature> enumerate_signatures(std::size_t n)
{
    if (n == 0)
        raise(ErrorKind::InvalidArity, "enumerate_signatures needs n >= 1");
    std::vector<ExpansionSignature> result;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            std::vector<Direction> dirs(n);
            // Most significant bit <-> first direction, so Positive < Negative lexicographically.
            for (std::size_t i = 0; i < n; ++i)
                dirs[i] = (mask >> (n - 1 - i)) & 1U ? Direction::Negative : Direction::Positive;
            result.emplace_back(perm, std::move(dirs));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

// ---------------------------------------------------------------------------
// TruncatedDirectedSeries

TruncatedDirectedSeries::TruncatedDirectedSeries(std::size_t variable, Direction direction, int anchor,
                                                 std::vector<RationalFunction> coeffs)
    : variable_(variable), direction_(direction), anchor_(anchor), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        raise(ErrorKind::InvalidArgument, "a truncated series needs at least one coefficient");
    const std::size_t n = coeffs_.front().num_vars();
    if (variable_ >= n)
        raise(ErrorKind::IndexOutOfRange, "series variable " + std::to_string(variable_ + 1));
    for (const auto& c : coeffs_) {
        if (c.num_vars() != n)
            raise(ErrorKind::ArityMismatch, "series coefficients with differing variable counts");
        if (c.numerator().involves(variable_) || c.denominator().involves(variable_))
            raise(ErrorKind::InvalidArgument, "series coefficient " + c.str() + " involves the series variable");
    }
}

TruncatedDirectedSeries TruncatedDirectedSeries::from_polynomial(const LaurentPolynomial& p, std::size_t variable,
                                                                 Direction direction, std::size_t truncation_order)
{
    const auto [lo, hi] = degree_range(p, variable);
    const int anchor = direction == Direction::Positive ? lo : hi;
    const int step = direction == Direction::Positive ? 1 : -1;
    std::vector<RationalFunction> coeffs;
    coeffs.reserve(truncation_order);
    for (std::size_t k = 0; k < truncation_order; ++k)
        coeffs.emplace_back(coefficient_of(p, variable, anchor + step * static_cast<int>(k)));
    return TruncatedDirectedSeries(variable, direction, anchor, std::move(coeffs));
}

int TruncatedDirectedSeries::exponent_at(std::size_t k) const
{
    const int offset = static_cast<int>(k);
    return direction_ == Direction::Positive ? anchor_ + offset : anchor_ - offset;
}

RationalFunction TruncatedDirectedSeries::coefficient_at(int exponent) const
{
    const long k = direction_ == Direction::Positive ? long{exponent} - anchor_ : long{anchor_} - exponent;
    if (k < 0)
        return RationalFunction(coeffs_.front().num_vars());
    if (static_cast<std::size_t>(k) >= coeffs_.size())
        raise(ErrorKind::IndexOutOfRange, "exponent " + std::to_string(exponent) + " is beyond the truncation");
    return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedDirectedSeries series_mul(const TruncatedDirectedSeries& s, const TruncatedDirectedSeries& t)
{
    if (s.direction() != t.direction())
        raise(ErrorKind::DirectionMismatch, "cannot multiply a positive and a negative series");
    if (s.variable() != t.variable())
        raise(ErrorKind::ArityMismatch, "series in different variables");
    const std::size_t order = std::min(s.truncation_order(), t.truncation_order());
    const std::size_t n = s.coeffs().front().num_vars();
    std::vector<RationalFunction> coeffs;
    coeffs.reserve(order);
    for (std::size_t k = 0; k < order; ++k) {
        RationalFunction acc(n);
        for (std::size_t i = 0; i <= k; ++i) {
            const auto& a = s.coeffs()[i];
            const auto& b = t.coeffs()[k - i];
            if (!a.is_zero() && !b.is_zero())
                acc = acc + a * b;
        }
        coeffs.push_back(std::move(acc));
    }
    return TruncatedDirectedSeries(s.variable(), s.direction(), s.anchor() + t.anchor(), std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Inversion

namespace detail {

InverseNumerators inverse_numerators(const LaurentPolynomial& p, std::size_t v, Direction direction,
                                     std::size_t count)
{
    if (p.is_zero())
        raise(ErrorKind::ZeroPolynomial, "cannot invert the zero polynomial");
    const auto [lo, hi] = degree_range(p, v);
    const bool positive = direction == Direction::Positive;
    const int extreme = positive ? lo : hi;
    const std::size_t span = static_cast<std::size_t>(hi - lo);

    // c_j: coefficient j steps inward from the extreme exponent.
    std::vector<LaurentPolynomial> inward;
    inward.reserve(span + 1);
    for (std::size_t j = 0; j <= span; ++j)
        inward.push_back(coefficient_of(p, v, positive ? extreme + static_cast<int>(j) : extreme - static_cast<int>(j)));

    const LaurentPolynomial& lead = inward[0];
    // weights[j] = c_j * lead^(j-1), j >= 1
    std::vector<LaurentPolynomial> weights(span + 1, LaurentPolynomial(p.num_vars()));
    LaurentPolynomial lead_power = LaurentPolynomial::constant(p.num_vars(), 1);
    for (std::size_t j = 1; j <= span; ++j) {
        weights[j] = inward[j] * lead_power;
        lead_power *= lead;
    }

    InverseNumerators result{lead, -extreme, {}};
    result.numerators.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        if (k == 0) {
            result.numerators.push_back(LaurentPolynomial::constant(p.num_vars(), 1));
            continue;
        }
        LaurentPolynomial t(p.num_vars());
        for (std::size_t j = 1; j <= std::min(k, span); ++j)
            if (!weights[j].is_zero())
                t -= weights[j] * result.numerators[k - j];
        result.numerators.push_back(std::move(t));
    }
    return result;
}

} // namespace detail

TruncatedDirectedSeries invert_directed(const LaurentPolynomial& p, std::size_t variable, Direction direction,
                                        std::size_t truncation_order)
{
    if (truncation_order == 0)
        raise(ErrorKind::InvalidArgument, "truncation order must be positive");
    if (variable >= p.num_vars())
        raise(ErrorKind::IndexOutOfRange, "variable index " + std::to_string(variable + 1));
    const auto inv = detail::inverse_numerators(p, variable, direction, truncation_order);
    std::vector<RationalFunction> coeffs;
    coeffs.reserve(truncation_order);
    LaurentPolynomial lead_power = inv.lead;
    for (std::size_t k = 0; k < truncation_order; ++k) {
        coeffs.push_back(rf_normalize(inv.numerators[k], lead_power));
        lead_power *= inv.lead;
    }
    return TruncatedDirectedSeries(variable, direction, inv.anchor, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Nested expansion

namespace {

class NestedExpander {
public:
    NestedExpander(const ExpansionSignature& sig, GridFunction& out) : sig_(sig), out_(out) {}

    void expand(const RationalFunction& r, std::size_t level, LatticePoint& point)
    {
        if (r.is_zero())
            return;
        if (level == sig_.num_vars()) {
            out_.set(point, r.constant_value());
            return;
        }

        const Box& box = out_.box();
        const std::size_t v = sig_.order()[level];
        const bool positive = sig_.directions()[level] == Direction::Positive;
        const LaurentPolynomial& num = r.numerator();
        const LaurentPolynomial& den = r.denominator();
        const auto [num_lo, num_hi] = degree_range(num, v);
        const auto [den_lo, den_hi] = degree_range(den, v);
        const int anchor = positive ? -den_lo : -den_hi;

        // Largest inverse index any box exponent can reach.
        const long kmax = positive ? long{box.hi(v)} - num_lo - anchor : long{num_hi} + anchor - box.lo(v);
        if (kmax < 0)
            return;

        const auto inv = detail::inverse_numerators(den, v, sig_.directions()[level], static_cast<std::size_t>(kmax) + 1);
        std::vector<LaurentPolynomial> lead_powers{LaurentPolynomial::constant(den.num_vars(), 1)};

        std::vector<LaurentPolynomial> num_coeffs;
        for (int j = num_lo; j <= num_hi; ++j)
            num_coeffs.push_back(coefficient_of(num, v, j));

        for (int e = box.lo(v); e <= box.hi(v); ++e) {
            // Pairs (j, k) with z^j from the numerator and index k of the inverse.
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            std::size_t top = 0;
            for (int j = num_lo; j <= num_hi; ++j) {
                const auto& nj = num_coeffs[static_cast<std::size_t>(j - num_lo)];
                if (nj.is_zero())
                    continue;
                const long k = positive ? long{e} - j - anchor : long{j} + anchor - e;
                if (k < 0 || k > kmax)
                    continue;
                pairs.emplace_back(static_cast<std::size_t>(j - num_lo), static_cast<std::size_t>(k));
                top = std::max(top, static_cast<std::size_t>(k));
            }
            if (pairs.empty())
                continue;
            while (lead_powers.size() <= top + 1)
                lead_powers.push_back(lead_powers.back() * inv.lead);

            LaurentPolynomial combined(den.num_vars());
            for (const auto& [j, k] : pairs)
                combined += num_coeffs[j] * inv.numerators[k] * lead_powers[top - k];
            if (combined.is_zero())
                continue;

            const RationalFunction coefficient = rf_normalize(combined, lead_powers[top + 1]);
            point[v] = e;
            expand(coefficient, level + 1, point);
        }
    }

private:
    const ExpansionSignature& sig_;
    GridFunction& out_;
};

} // namespace

GridFunction expand_nested(const LaurentPolynomial& q, const ExpansionSignature& sig, const Box& box)
{
    if (q.is_zero())
        raise(ErrorKind::ZeroPolynomial, "cannot expand the inverse of the zero polynomial");
    if (sig.num_vars() != q.num_vars() || box.num_vars() != q.num_vars())
        raise(ErrorKind::ArityMismatch, "polynomial, signature and box must share the variable count");

    GridFunction out(box);
    NestedExpander expander(sig, out);
    LatticePoint point(q.num_vars());
    expander.expand(rf_normalize(LaurentPolynomial::constant(q.num_vars(), 1), q), 0, point);
    return out;
}

} // namespace latgreen
