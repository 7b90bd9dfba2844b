// Acceptance gate: every criterion is checked exactly, with a wall-clock
// budget, and reported as one PASS/FAIL line.

#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <unistd.h>

#include "cli.hpp"
#include "corpus.hpp"
#include "latgreen/operator_parser.hpp"
#include "latgreen/solvers.hpp"
#include "support.hpp"

using namespace latgreen;

namespace {

class Check {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok && failures_++ < 5)
            std::fprintf(stderr, "    failed: %s\n", what.c_str());
    }
    bool ok() const { return failures_ == 0; }
    int failures() const { return failures_; }

private:
    int failures_ = 0;
};

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Check&)> body;
};

const ExpansionSignature kPositive({0}, {Direction::Positive});
const ExpansionSignature kNegative({0}, {Direction::Negative});

void forward_difference_1d(Check& check)
{
    const auto op = DifferenceOperator::forward_difference(1);
    const Box box({{-5, 5}});
    const auto pos = fs_series(op, kPositive, box);
    const auto neg = fs_series(op, kNegative, box);
    for (int m = -5; m <= 5; ++m) {
        check.expect(pos.at({m}) == Rational(m >= 1 ? 1 : 0), "positive value at " + std::to_string(m));
        check.expect(neg.at({m}) == Rational(m <= 0 ? -1 : 0), "negative value at " + std::to_string(m));
    }
    for (const auto* f : {&pos, &neg}) {
        const auto report = verify_fundamental(op, *f);
        check.expect(report.passed && report.interior == Box({{-5, 4}}), "verify on -5:4");
        // hand convolution: f(m+1) - f(m) == delta(m)
        for (int m = -5; m <= 4; ++m)
            check.expect(f->at({m + 1}) - f->at({m}) == Rational(m == 0 ? 1 : 0), "convolution");
    }
}

void laplacian_fs_all(Check& check)
{
    const auto op = DifferenceOperator::laplacian(2);
    const auto all = fs_series_all(op, Box::cube(2, 5));
    check.expect(all.size() == 8, "8 grids");
    for (const auto& s : all) {
        const auto report = verify_fundamental(op, s.grid);
        check.expect(report.passed && report.interior == Box::cube(2, 4), "verify " + s.signature.str());
        check.expect(testkit::oracle_is_fundamental(op, s.grid), "oracle " + s.signature.str());
    }
}

void random_sweep(Check& check)
{
    testkit::Rng rng(20240601);
    const Box box = Box::cube(2, 4);
    for (int trial = 0; trial < 25; ++trial) {
        const auto op = testkit::random_operator(rng, 2, 1, 9);
        const std::string name = serialize_operator(op);
        std::vector<GridFunction> grids;
        for (auto& s : fs_series_all(op, box))
            grids.push_back(std::move(s.grid));
        check.expect(grids.size() == 8, name + ": 8 branches");
        grids.push_back(fs_linear(op, box, ExtensionPolicy::zero()));
        grids.push_back(fs_linear(op, box, ExtensionPolicy::seeded(7 + trial)));
        for (const auto& g : grids) {
            check.expect(verify_fundamental(op, g).passed, name + ": verify");
            check.expect(testkit::oracle_is_fundamental(op, g), name + ": oracle");
        }
        for (std::size_t i = 0; i < grids.size(); ++i)
            for (std::size_t j = i + 1; j < grids.size(); ++j)
                check.expect(homogeneous_difference(op, grids[i], grids[j]).passed, name + ": homogeneous");
    }
}

void duality_multiplicity(Check& check)
{
    const auto op = DifferenceOperator::laplacian(2);
    const Box box = Box::cube(2, 4);
    const auto zero = fs_linear(op, box, ExtensionPolicy::zero());
    const auto seeded = fs_linear(op, box, ExtensionPolicy::seeded(7));
    std::size_t differing = 0;
    for (const auto& m : box.points())
        differing += zero.at(m) != seeded.at(m);
    check.expect(differing >= 1, "grids differ");
    check.expect(verify_fundamental(op, zero).passed, "zero policy verifies");
    check.expect(verify_fundamental(op, seeded).passed, "seeded policy verifies");
    check.expect(testkit::oracle_is_fundamental(op, zero) && testkit::oracle_is_fundamental(op, seeded), "oracle");
    check.expect(homogeneous_difference(op, zero, seeded).passed, "difference is homogeneous");
}

void series_algebra(Check& check)
{
    testkit::Rng rng(5150);
    std::uniform_int_distribution<int> low(-4, 2), span(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const int lo = low(rng);
        const auto p = testkit::random_nonzero_polynomial(rng, 1, lo, lo + span(rng));
        const auto [plo, phi] = degree_range(p, 0);
        std::map<int, mpq_class> plain;
        for (const auto& [e, c] : p.terms())
            plain[e[0]] = c.raw();
        for (Direction d : {Direction::Positive, Direction::Negative}) {
            const auto inv = invert_directed(p, 0, d, 20);
            const auto prod = series_mul(TruncatedDirectedSeries::from_polynomial(p, 0, d, 20), inv);
            bool one = prod.anchor() == 0 && prod.truncation_order() == 20;
            for (std::size_t k = 0; k < 20 && one; ++k)
                one = prod.coeffs()[k] == RationalFunction(LaurentPolynomial::constant(1, k == 0 ? 1 : 0));
            check.expect(one, "multiply back " + p.str());
            check.expect(inv.anchor() == (d == Direction::Positive ? -plo : -phi), "anchor law " + p.str());
            int anchor = 0;
            const auto oracle = testkit::oracle_geometric_inverse(plain, d, 20, &anchor);
            bool same = anchor == inv.anchor();
            for (std::size_t k = 0; k < 20 && same; ++k)
                same = inv.coeffs()[k] == RationalFunction(LaurentPolynomial::constant(1, Rational(oracle[k])));
            check.expect(same, "geometric sum oracle " + p.str());
        }
        const auto pos = invert_directed(p, 0, Direction::Positive, 20);
        const auto neg = invert_directed(p, 0, Direction::Negative, 20);
        for (const auto& [s, t] : {std::pair{pos, neg}, std::pair{neg, pos}}) {
            bool rejected = false;
            try {
                series_mul(s, t);
            } catch (const Error& e) {
                rejected = e.kind() == ErrorKind::DirectionMismatch;
            }
            check.expect(rejected, "mixed product rejected");
        }
    }
}

void polynomial_bases(Check& check)
{
    const auto lap = DifferenceOperator::laplacian(2);
    const auto basis = polynomial_solution_basis(lap, 3);
    check.expect(basis.size() == testkit::oracle_polynomial_kernel_dimension(lap, 3), "dimension matches oracle");
    const auto monomials = monomials_up_to(2, 3);
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& p : basis) {
        check.expect(apply_to_polynomial(lap, p).is_zero(), "annihilated " + p.str());
        std::vector<mpq_class> row;
        for (const auto& e : monomials)
            row.push_back(p.polynomial().coefficient(e).raw());
        rows.push_back(row);
    }
    check.expect(testkit::oracle_rank(rows) == basis.size(), "independent");

    const auto fd = polynomial_solution_basis(DifferenceOperator::forward_difference(1), 3);
    check.expect(fd.size() == 1 && fd[0] == MultiPolynomial(LaurentPolynomial::constant(1, 1)), "forward difference {1}");
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int cli(std::vector<std::string> args, std::string* out)
{
    args.insert(args.begin(), "latgreen");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream os, es;
    const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), os, es);
    if (out)
        *out = os.str() + es.str();
    return code;
}

void cli_round_trip(Check& check)
{
    const auto corpus = load_operator_corpus(LATGREEN_TEST_DATA "/operators.txt");
    check.expect(!corpus.empty(), "corpus present");
    for (const auto& [n, text] : corpus) {
        const auto op = parse_operator(text, n);
        const auto serialized = serialize_operator(op);
        const auto again = parse_operator(serialized, n);
        check.expect(again == op && serialize_operator(again) == serialized, "fixpoint " + text);
    }

    const std::string lap = "1 - 1/4*(z1 + 1/z1 + z2 + 1/z2)";
    const auto dir = std::filesystem::temp_directory_path() / ("latgreen_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto a = dir / "a.csv", b = dir / "b.csv";
    check.expect(cli({"fs-all", "--op", lap, "--box", "-5:5,-5:5", "--out", a.string()}, nullptr) == 0, "fs-all a");
    check.expect(cli({"fs-all", "--op", lap, "--box", "-5:5,-5:5", "--out", b.string()}, nullptr) == 0, "fs-all b");
    const std::string first = read_file(a);
    check.expect(!first.empty() && first == read_file(b), "byte-identical runs");

    std::string tampered = first;
    const std::string row = "\n1,0,";
    const auto pos = tampered.find(row);
    check.expect(pos != std::string::npos, "row (1,0) present");
    if (pos != std::string::npos) {
        const auto begin = pos + row.size();
        const auto end = tampered.find('\n', begin);
        const std::string value = tampered.substr(begin, end - begin);
        tampered.replace(begin, end - begin, value == "7" ? "8" : "7");
        std::ofstream(a, std::ios::binary) << tampered;
        std::string report;
        const int code = cli({"verify", a.string()}, &report);
        check.expect(code != 0, "tampered grid rejected");
        check.expect(report.find("violation at m=(1,0)") != std::string::npos, "violating point named");
    }
    std::filesystem::remove_all(dir);
}

} // namespace

int main()
{
    const Criterion criteria[] = {
        {1, "1-D forward difference, both directions", 1.0, forward_difference_1d},
        {2, "2-D Laplacian fs-all, 8 verified grids", 30.0, laplacian_fs_all},
        {3, "random operator sweep, 25 operators", 300.0, random_sweep},
        {4, "duality multiplicity", 10.0, duality_multiplicity},
        {5, "series algebra, 200 polynomials", 30.0, series_algebra},
        {6, "polynomial solution bases", 10.0, polynomial_bases},
        {7, "CLI round trip and determinism", 10.0, cli_round_trip},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.budget_seconds;
        const bool pass = check.ok() && in_time;
        failed += !pass;
        std::printf("criterion %d %s: %s (%.2fs, budget %.0fs%s)\n", c.id, pass ? "PASS" : "FAIL", c.title, seconds,
                    c.budget_seconds, in_time ? "" : ", over budget");
        std::fflush(stdout);
    }
    std::printf("%d/7 criteria passed\n", 7 - failed);
    return failed == 0 ? 0 : 1;
}
