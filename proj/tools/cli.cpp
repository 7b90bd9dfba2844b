#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "latgreen/operator_parser.hpp"
#include "latgreen/solvers.hpp"

namespace latgreen::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string trimmed(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::optional<Box> config_box(const RunConfig& config)
{
    if (!config.box)
        return std::nullopt;
    return Box::parse(*config.box);
}

Box require_box(const RunConfig& config, const char* command)
{
    auto box = config_box(config);
    if (!box)
        raise(ErrorKind::InvalidArgument, std::string(command) + " needs --box");
    return *box;
}

DifferenceOperator load_operator(const RunConfig& config)
{
    if (config.op.empty())
        raise(ErrorKind::InvalidArgument, "missing --op");
    std::string text = config.op.front() == '@' ? read_file(config.op.substr(1)) : config.op;
    text = trimmed(text);

    std::size_t nvars = 0;
    if (config.nvars)
        nvars = *config.nvars;
    else if (auto box = config_box(config))
        nvars = box->num_vars();

    if (!text.empty() && (text.front() == '[' || text.front() == '{'))
        return parse_operator_json(text, nvars);
    if (nvars == 0)
        nvars = infer_num_vars(text);
    return parse_operator(text, nvars);
}

void print_violations(std::ostream& os, const VerificationReport& report)
{
    for (const auto& v : report.violations)
        os << "  violation at m=" << v.point.str() << ": value=" << v.actual << " expected=" << v.expected << '\n';
}

// Writes the primary document to --out when given, else to `out`.
class Sink {
public:
    Sink(const RunConfig& config, std::ostream& out) : out_(&out)
    {
        if (config.out_path) {
            file_.open(*config.out_path, std::ios::binary);
            if (!file_)
                raise(ErrorKind::InvalidArgument, "cannot write '" + *config.out_path + "'");
            out_ = &file_;
        }
    }

    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

int run_symbol(const RunConfig& config, std::ostream& out)
{
    const DifferenceOperator op = load_operator(config);
    Sink sink(config, out);
    if (config.format == GridFormat::Json) {
        const nlohmann::json doc = {{"nvars", op.num_vars()}, {"symbol", serialize_operator(op)}};
        sink.stream() << doc.dump(1) << '\n';
    } else {
        sink.stream() << serialize_operator(op) << '\n';
    }
    return kExitOk;
}

int emit_checked(const RunConfig& config, std::vector<GridRecord>& records, std::ostream& out, std::ostream& err)
{
    bool all_pass = true;
    for (const auto& rec : records) {
        const auto& report = *rec.verification;
        all_pass = all_pass && report.passed;
        err << rec.signature.value_or(rec.policy ? "policy=" + *rec.policy : "grid") << ' '
            << verification_summary(report) << '\n';
        print_violations(err, report);
    }
    Sink sink(config, out);
    write_grids(sink.stream(), records, config.format, config.approx);
    return all_pass ? kExitOk : kExitVerificationFailed;
}

int run_fs(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const DifferenceOperator op = load_operator(config);
    const Box box = require_box(config, "fs");
    const ExpansionSignature sig =
        config.signature ? ExpansionSignature::parse(*config.signature) : ExpansionSignature::standard(op.num_vars());
    GridFunction grid = fs_series(op, sig, box);
    VerificationReport report = verify_fundamental(op, grid);
    std::vector<GridRecord> records{{serialize_operator(op), std::move(grid), sig.str(), std::nullopt, std::move(report)}};
    return emit_checked(config, records, out, err);
}

int run_fs_all(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const DifferenceOperator op = load_operator(config);
    const Box box = require_box(config, "fs-all");
    // Fail fast on windows that cannot be verified.
    verify_fundamental(op, GridFunction(box));

    std::vector<GridRecord> records;
    for (auto& solution : fs_series_all(op, box, config.parallel)) {
        VerificationReport report = verify_fundamental(op, solution.grid);
        records.push_back({serialize_operator(op), std::move(solution.grid), solution.signature.str(), std::nullopt,
                           std::move(report)});
    }
    return emit_checked(config, records, out, err);
}

int run_duality(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const DifferenceOperator op = load_operator(config);
    const Box box = require_box(config, "duality");
    const ExtensionPolicy policy = config.policy ? ExtensionPolicy::parse(*config.policy) : ExtensionPolicy::zero();
    GridFunction grid = fs_linear(op, box, policy);
    VerificationReport report = verify_fundamental(op, grid);
    std::vector<GridRecord> records{
        {serialize_operator(op), std::move(grid), std::nullopt, policy.str(), std::move(report)}};
    return emit_checked(config, records, out, err);
}

int run_verify(const RunConfig& config, std::ostream& out)
{
    if (!config.grid_path)
        raise(ErrorKind::InvalidArgument, "verify needs a grid file");
    std::ifstream in(*config.grid_path, std::ios::binary);
    if (!in)
        raise(ErrorKind::InvalidArgument, "cannot read '" + *config.grid_path + "'");
    const auto records = read_grids(in);

    Sink sink(config, out);
    bool all_pass = true;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        const DifferenceOperator op =
            config.op.empty() ? parse_operator(rec.symbol, rec.grid.num_vars()) : load_operator(config);
        const VerificationReport report = verify_fundamental(op, rec.grid);
        all_pass = all_pass && report.passed;
        sink.stream() << "grid " << i + 1;
        if (rec.signature)
            sink.stream() << " signature=" << *rec.signature;
        if (rec.policy)
            sink.stream() << " policy=" << *rec.policy;
        sink.stream() << ' ' << verification_summary(report) << '\n';
        print_violations(sink.stream(), report);
    }
    return all_pass ? kExitOk : kExitVerificationFailed;
}

int run_polybasis(const RunConfig& config, std::ostream& out)
{
    const DifferenceOperator op = load_operator(config);
    if (!config.max_degree)
        raise(ErrorKind::InvalidArgument, "polybasis needs --maxdeg");
    const auto basis = polynomial_solution_basis(op, *config.max_degree);

    Sink sink(config, out);
    if (config.format == GridFormat::Json) {
        nlohmann::json items = nlohmann::json::array();
        for (const auto& p : basis)
            items.push_back(p.str());
        const nlohmann::json doc = {{"nvars", op.num_vars()},
                                    {"symbol", serialize_operator(op)},
                                    {"max_degree", *config.max_degree},
                                    {"dimension", basis.size()},
                                    {"basis", std::move(items)}};
        sink.stream() << doc.dump(1) << '\n';
    } else {
        sink.stream() << "# symbol: " << serialize_operator(op) << '\n'
                      << "# maxdeg: " << *config.max_degree << '\n'
                      << "# dimension: " << basis.size() << '\n'
                      << "index,polynomial\n";
        for (std::size_t i = 0; i < basis.size(); ++i)
            sink.stream() << i + 1 << ',' << basis[i].str() << '\n';
    }
    return kExitOk;
}

} // namespace

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::InvalidArgument:
    case ErrorKind::InvalidArity:
    case ErrorKind::ArityMismatch:
        return kExitConfigError;
    default:
        return kExitDomainError;
    }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        switch (config.command) {
        case Command::Symbol: return run_symbol(config, out);
        case Command::Fs: return run_fs(config, out, err);
        case Command::FsAll: return run_fs_all(config, out, err);
        case Command::Duality: return run_duality(config, out, err);
        case Command::Verify: return run_verify(config, out);
        case Command::Polybasis: return run_polybasis(config, out);
        }
    } catch (const Error& e) {
        err << "latgreen: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kExitConfigError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fundamental solutions of linear partial difference operators with constant coefficients"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "csv";

    struct Spec {
        const char* name;
        Command command;
        const char* help;
    };
    const Spec specs[] = {
        {"symbol", Command::Symbol, "print the canonical symbol of the operator"},
        {"fs", Command::Fs, "series fundamental solution for one expansion signature, verified"},
        {"fs-all", Command::FsAll, "series fundamental solutions for all 2^n n! signatures, verified"},
        {"duality", Command::Duality, "fundamental solution from the windowed linear system, verified"},
        {"verify", Command::Verify, "re-verify every grid in a grid file"},
        {"polybasis", Command::Polybasis, "basis of polynomial solutions of P p = 0"},
    };

    std::vector<std::pair<CLI::App*, Command>> subs;
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        subs.emplace_back(sub, spec.command);
        sub->add_option("--op", config.op, "operator symbol in z1..zn, a JSON term list, or @file");
        sub->add_option("--nvars", config.nvars, "number of variables (default: box arity or largest z index)");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", config.out_path, "write the output document to this path");
        switch (spec.command) {
        case Command::Fs:
            sub->add_option("--sig", config.signature, "expansion signature, e.g. \"2,1;+,-\"");
            [[fallthrough]];
        case Command::FsAll:
            sub->add_option("--box", config.box, "inclusive window lo:hi[,lo:hi...]")->allow_extra_args(false);
            sub->add_flag("--approx", config.approx, "add display-only decimal approximations");
            break;
        case Command::Duality:
            sub->add_option("--box", config.box, "inclusive window lo:hi[,lo:hi...]")->allow_extra_args(false);
            sub->add_option("--policy", config.policy, "free-variable policy: zero | seed:<int>");
            sub->add_flag("--approx", config.approx, "add display-only decimal approximations");
            break;
        case Command::Verify:
            sub->add_option("grid", config.grid_path, "grid file (csv or json)")->required();
            break;
        case Command::Polybasis:
            sub->add_option("--maxdeg", config.max_degree, "maximum total degree");
            break;
        case Command::Symbol:
            break;
        }
    }

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i)
        args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "latgreen: " << e.what() << '\n';
        return kExitConfigError;
    }

    for (const auto& [sub, command] : subs)
        if (sub->parsed())
            config.command = command;
    config.format = format == "json" ? GridFormat::Json : GridFormat::Csv;
    return run(config, out, err);
}

} // namespace latgreen::cli
