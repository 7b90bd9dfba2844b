#include "latgreen/solvers.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <memory>
#include <random>

#include "latgreen/error.hpp"
#include "latgreen/linear_algebra.hpp"

namespace latgreen {

namespace {

void require_arity(std::size_t expected, std::size_t got, const char* what)
{
    if (expected != got)
        raise(ErrorKind::ArityMismatch, std::string(what) + " has " + std::to_string(got)
                                            + " variables, operator has " + std::to_string(expected));
}

} // namespace

GridFunction fs_series(const DifferenceOperator& op, const ExpansionSignature& sig, const Box& box)
{
    require_arity(op.num_vars(), sig.num_vars(), "signature");
    require_arity(op.num_vars(), box.num_vars(), "box");
    return expand_nested(mirror(symbol(op)), sig, box);
}

std::vector<SignedSolution> fs_series_all(const DifferenceOperator& op, const Box& box, bool parallel)
{
    require_arity(op.num_vars(), box.num_vars(), "box");
    const auto signatures = enumerate_signatures(op.num_vars());
    std::vector<SignedSolution> out;
    out.reserve(signatures.size());
    if (!parallel) {
        for (const auto& sig : signatures)
            out.push_back({sig, fs_series(op, sig, box)});
        return out;
    }
    std::vector<std::future<GridFunction>> pending;
    pending.reserve(signatures.size());
    for (const auto& sig : signatures)
        pending.push_back(std::async(std::launch::async, [&op, &box, sig] { return fs_series(op, sig, box); }));
    for (std::size_t i = 0; i < signatures.size(); ++i)
        out.push_back({signatures[i], pending[i].get()});
    return out;
}

// ---------------------------------------------------------------------------

ExtensionPolicy ExtensionPolicy::parse(std::string_view text)
{
    if (text == "zero")
        return zero();
    constexpr std::string_view prefix = "seed:";
    if (text.substr(0, prefix.size()) == prefix) {
        const auto digits = text.substr(prefix.size());
        std::uint64_t seed = 0;
        const auto* end = digits.data() + digits.size();
        auto [ptr, ec] = std::from_chars(digits.data(), end, seed);
        if (!digits.empty() && ec == std::errc() && ptr == end)
            return seeded(seed);
    }
    raise(ErrorKind::InvalidArgument, "policy must be 'zero' or 'seed:<int>', got '" + std::string(text) + "'");
}

std::string ExtensionPolicy::str() const
{
    return rule_ == Rule::FreeVarsZero ? "zero" : "seed:" + std::to_string(seed_);
}

std::function<Rational(std::size_t)> ExtensionPolicy::free_value_source() const
{
    if (rule_ == Rule::FreeVarsZero)
        return [](std::size_t) { return Rational(); };
    auto engine = std::make_shared<std::mt19937_64>(seed_);
    return [engine](std::size_t) {
        const long num = static_cast<long>((*engine)() % 19) - 9;
        const long den = static_cast<long>((*engine)() % 9) + 1;
        return Rational(num, den);
    };
}

GridFunction fs_linear(const DifferenceOperator& op, const Box& box, const ExtensionPolicy& policy)
{
    require_arity(op.num_vars(), box.num_vars(), "box");
    const auto inner = interior(box, op);
    if (!inner)
        raise(ErrorKind::EmptyInterior, "operator support does not fit in box " + box.str());
    if (!inner->contains_origin())
        raise(ErrorKind::OriginNotCovered, "interior " + inner->str() + " does not contain the origin");

    RationalMatrix system(inner->size(), box.size());
    std::vector<Rational> rhs(inner->size());
    for (std::size_t r = 0; r < inner->size(); ++r) {
        const LatticePoint m = inner->point_at(r);
        for (const auto& [alpha, c] : op.terms())
            system(r, box.index_of(m + alpha)) += c;
        if (m.is_zero())
            rhs[r] = 1;
    }

    auto solution = solve_linear_system(system, rhs, policy.free_value_source());
    if (!solution)
        raise(ErrorKind::BoxTooSmall, "the windowed system on " + box.str() + " is inconsistent");
    return GridFunction(box, std::move(*solution));
}

VerificationReport homogeneous_difference(const DifferenceOperator& op, const GridFunction& f, const GridFunction& g)
{
    if (!(f.box() == g.box()))
        raise(ErrorKind::BoxMismatch, "grids on " + f.box().str() + " and " + g.box().str());
    const GridFunction image = apply(op, f - g);
    VerificationReport report{true, image.box(), {}};
    for (std::size_t k = 0; k < image.values().size(); ++k)
        if (!image.values()[k].is_zero())
            report.violations.push_back({image.box().point_at(k), image.values()[k], Rational()});
    report.passed = report.violations.empty();
    return report;
}

// ---------------------------------------------------------------------------

MultiPolynomial::MultiPolynomial(LaurentPolynomial p) : poly_(std::move(p))
{
    if (!poly_.is_ordinary())
        raise(ErrorKind::InvalidArgument, "polynomial in m has a negative exponent: " + poly_.str("m"));
}

long MultiPolynomial::total_degree() const
{
    return poly_.is_zero() ? -1 : poly_.leading_term().first.total_degree();
}

Rational MultiPolynomial::evaluate(const LatticePoint& m) const
{
    if (m.size() != num_vars())
        raise(ErrorKind::ArityMismatch, "evaluation point " + m.str());
    Rational sum;
    for (const auto& [e, c] : poly_.terms()) {
        mpq_class term = c.raw();
        for (std::size_t i = 0; i < e.size(); ++i) {
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), mpz_class(m[i]).get_mpz_t(), static_cast<unsigned long>(e[i]));
            term *= power;
        }
        sum += Rational(term);
    }
    return sum;
}

MultiPolynomial apply_to_polynomial(const DifferenceOperator& op, const MultiPolynomial& p)
{
    require_arity(op.num_vars(), p.num_vars(), "polynomial");
    const std::size_t n = p.num_vars();

    // (m_i + a)^e by the binomial theorem.
    auto shifted_power = [n](std::size_t i, int a, int e) {
        LaurentPolynomial r(n);
        mpz_class binom = 1;
        for (int k = 0; k <= e; ++k) {
            if (k > 0) {
                binom *= e - k + 1;
                binom /= k;
            }
            mpz_class apow;
            mpz_pow_ui(apow.get_mpz_t(), mpz_class(a).get_mpz_t(), static_cast<unsigned long>(e - k));
            r.add_term(ExponentVector::unit(n, i, k), Rational(mpz_class(binom * apow)));
        }
        return r;
    };

    LaurentPolynomial result(n);
    for (const auto& [alpha, c] : op.terms()) {
        for (const auto& [e, coeff] : p.terms()) {
            LaurentPolynomial term = LaurentPolynomial::constant(n, c * coeff);
            for (std::size_t i = 0; i < n; ++i)
                if (e[i] > 0)
                    term *= shifted_power(i, alpha[i], e[i]);
            result += term;
        }
    }
    return MultiPolynomial(std::move(result));
}

std::vector<ExponentVector> monomials_up_to(std::size_t num_vars, unsigned max_degree)
{
    std::vector<ExponentVector> out;
    ExponentVector e(num_vars);
    // Enumerate all vectors with entries summing to <= max_degree.
    auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
        if (i == num_vars) {
            out.push_back(e);
            return;
        }
        for (unsigned k = 0; k <= remaining; ++k) {
            e[i] = static_cast<int>(k);
            self(self, i + 1, remaining - k);
        }
        e[i] = 0;
    };
    rec(rec, 0, max_degree);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

std::vector<MultiPolynomial> polynomial_solution_basis(const DifferenceOperator& op, unsigned max_degree)
{
    const std::size_t n = op.num_vars();
    const auto monomials = monomials_up_to(n, max_degree);
    const std::size_t count = monomials.size();

    // Column j holds the coefficients of P(m^monomials[j]) in the same basis.
    RationalMatrix image(count, count);
    for (std::size_t j = 0; j < count; ++j) {
        const MultiPolynomial pj = apply_to_polynomial(op, MultiPolynomial(LaurentPolynomial::monomial(monomials[j])));
        for (const auto& [e, c] : pj.terms()) {
            const auto it = std::lower_bound(monomials.begin(), monomials.end(), e, GradedLexLess{});
            image(static_cast<std::size_t>(it - monomials.begin()), j) = c;
        }
    }

    const auto kernel = nullspace_basis(image);
    if (kernel.empty())
        return {};

    // Canonical basis: RREF with the graded-lex largest monomial first.
    RationalMatrix stacked(kernel.size(), count);
    for (std::size_t r = 0; r < kernel.size(); ++r)
        for (std::size_t j = 0; j < count; ++j)
            stacked(r, count - 1 - j) = kernel[r][j];
    const RationalMatrix canonical = reduced_row_echelon(stacked);

    std::vector<MultiPolynomial> basis;
    for (std::size_t r = canonical.rows(); r-- > 0;) {
        LaurentPolynomial p(n);
        for (std::size_t j = 0; j < count; ++j)
            p.add_term(monomials[count - 1 - j], canonical(r, j));
        basis.emplace_back(std::move(p));
    }
    return basis;
}

} // namespace latgreen
