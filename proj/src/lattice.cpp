#include "latgreen/lattice.hpp"

#include <algorithm>

#include "latgreen/error.hpp"

namespace latgreen {

DifferenceOperator::DifferenceOperator(LaurentPolynomial coefficients)
    : coefficients_(std::move(coefficients))
{
    if (coefficients_.is_zero())
        raise(ErrorKind::ZeroOperator, "the operator has no nonzero coefficient");
}

DifferenceOperator::DifferenceOperator(std::size_t num_vars, const std::vector<Term>& terms)
    : coefficients_(num_vars)
{
    for (const auto& [alpha, c] : terms)
        coefficients_.add_term(alpha, c);
    if (coefficients_.is_zero())
        raise(ErrorKind::ZeroOperator, "the operator has no nonzero coefficient");
}

DifferenceOperator DifferenceOperator::from_symbol(const LaurentPolynomial& symbol)
{
    return DifferenceOperator(symbol);
}

DifferenceOperator DifferenceOperator::identity(std::size_t num_vars)
{
    return DifferenceOperator(LaurentPolynomial::constant(num_vars, 1));
}

DifferenceOperator DifferenceOperator::forward_difference(std::size_t num_vars, std::size_t v)
{
    return DifferenceOperator(LaurentPolynomial::variable(num_vars, v) - LaurentPolynomial::constant(num_vars, 1));
}

DifferenceOperator DifferenceOperator::laplacian(std::size_t num_vars)
{
    LaurentPolynomial p = LaurentPolynomial::constant(num_vars, 1);
    const Rational w(1L, static_cast<long>(2 * num_vars));
    for (std::size_t v = 0; v < num_vars; ++v) {
        p.add_term(ExponentVector::unit(num_vars, v, 1), -w);
        p.add_term(ExponentVector::unit(num_vars, v, -1), -w);
    }
    return DifferenceOperator(std::move(p));
}

LaurentPolynomial symbol(const DifferenceOperator& op)
{
    LaurentPolynomial p(op.num_vars());
    for (const auto& [alpha, c] : op.terms())
        p.add_term(alpha, c);
    return p;
}

GridFunction delta(const Box& box)
{
    GridFunction f(box);
    const LatticePoint origin(box.num_vars());
    if (box.contains(origin))
        f.set(origin, 1);
    return f;
}

std::optional<Box> interior(const Box& box, const DifferenceOperator& op)
{
    const std::size_t n = op.num_vars();
    if (box.num_vars() != n)
        raise(ErrorKind::ArityMismatch, "box has " + std::to_string(box.num_vars()) + " coordinates, operator "
                                            + std::to_string(n));
    std::vector<Box::Range> ranges;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [amin, amax] = degree_range(symbol(op), i);
        // Clipped to the box: a one-sided support would otherwise reach past it.
        const int lo = std::max(box.lo(i), box.lo(i) - amin);
        const int hi = std::min(box.hi(i), box.hi(i) - amax);
        if (lo > hi)
            return std::nullopt;
        ranges.emplace_back(lo, hi);
    }
    return Box(std::move(ranges));
}

GridFunction apply(const DifferenceOperator& op, const GridFunction& f)
{
    const auto inner = interior(f.box(), op);
    if (!inner)
        raise(ErrorKind::EmptyInterior, "operator support does not fit in box " + f.box().str());
    GridFunction out(*inner);
    for (std::size_t k = 0; k < inner->size(); ++k) {
        const LatticePoint m = inner->point_at(k);
        Rational sum;
        for (const auto& [alpha, c] : op.terms())
            sum += c * f.at(m + alpha);
        out.set(m, std::move(sum));
    }
    return out;
}

VerificationReport verify_fundamental(const DifferenceOperator& op, const GridFunction& f)
{
    const auto inner = interior(f.box(), op);
    if (!inner)
        raise(ErrorKind::EmptyInterior, "operator support does not fit in box " + f.box().str());
    if (!inner->contains_origin())
        raise(ErrorKind::OriginNotCovered, "interior " + inner->str() + " does not contain the origin");

    const GridFunction image = apply(op, f);
    const GridFunction expected = delta(*inner);
    VerificationReport report{true, *inner, {}};
    for (std::size_t k = 0; k < inner->size(); ++k) {
        if (image.values()[k] != expected.values()[k])
            report.violations.push_back({inner->point_at(k), image.values()[k], expected.values()[k]});
    }
    report.passed = report.violations.empty();
    return report;
}

} // namespace latgreen
