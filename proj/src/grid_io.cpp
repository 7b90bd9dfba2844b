#include "latgreen/grid_io.hpp"

#include <cstdio>
#include <iterator>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "latgreen/error.hpp"

namespace latgreen {

namespace {

constexpr const char* kCsvMagic = "# latgreen grid";
constexpr const char* kJsonFormat = "latgreen-grid";

std::string approx_text(const Rational& r)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", r.to_double());
    return buf;
}

void write_csv(std::ostream& os, const std::vector<GridRecord>& records, bool approx)
{
    bool first = true;
    for (const auto& rec : records) {
        if (!first)
            os << '\n';
        first = false;
        const Box& box = rec.grid.box();
        os << kCsvMagic << '\n';
        os << "# nvars: " << box.num_vars() << '\n';
        os << "# symbol: " << rec.symbol << '\n';
        os << "# box: " << box.str() << '\n';
        if (rec.signature)
            os << "# signature: " << *rec.signature << '\n';
        if (rec.policy)
            os << "# policy: " << *rec.policy << '\n';
        if (rec.verification)
            os << "# verification: " << verification_summary(*rec.verification) << '\n';
        for (std::size_t i = 0; i < box.num_vars(); ++i)
            os << 'm' << i + 1 << ',';
        os << "value" << (approx ? ",approx" : "") << '\n';
        for (std::size_t k = 0; k < box.size(); ++k) {
            const LatticePoint m = box.point_at(k);
            for (std::size_t i = 0; i < m.size(); ++i)
                os << m[i] << ',';
            os << rec.grid.values()[k].str();
            if (approx)
                os << ',' << approx_text(rec.grid.values()[k]);
            os << '\n';
        }
    }
}

nlohmann::json report_json(const VerificationReport& report)
{
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"m", v.point.entries()}, {"value", v.actual.str()}, {"expected", v.expected.str()}});
    return {{"status", report.passed ? "PASS" : "FAIL"},
            {"interior", report.interior.str()},
            {"violations", std::move(violations)}};
}

void write_json(std::ostream& os, const std::vector<GridRecord>& records, bool approx)
{
    nlohmann::json grids = nlohmann::json::array();
    for (const auto& rec : records) {
        const Box& box = rec.grid.box();
        nlohmann::json values = nlohmann::json::array();
        for (std::size_t k = 0; k < box.size(); ++k) {
            nlohmann::json entry = {{"m", box.point_at(k).entries()}, {"value", rec.grid.values()[k].str()}};
            if (approx)
                entry["approx"] = rec.grid.values()[k].to_double();
            values.push_back(std::move(entry));
        }
        nlohmann::json g = {{"nvars", box.num_vars()}, {"symbol", rec.symbol}, {"box", box.str()},
                            {"values", std::move(values)}};
        if (rec.signature)
            g["signature"] = *rec.signature;
        if (rec.policy)
            g["policy"] = *rec.policy;
        if (rec.verification)
            g["verification"] = report_json(*rec.verification);
        grids.push_back(std::move(g));
    }
    nlohmann::json doc = {{"format", kJsonFormat}, {"version", 1}, {"grids", std::move(grids)}};
    os << doc.dump(1) << '\n';
}

[[noreturn]] void bad_grid(const std::string& message)
{
    raise(ErrorKind::SyntaxError, "grid file: " + message);
}

// Collects point values and checks every box point appears exactly once.
class GridBuilder {
public:
    explicit GridBuilder(Box box) : grid_(box), seen_(box.size(), false) {}

    void put(const LatticePoint& m, Rational value)
    {
        if (!grid_.box().contains(m))
            bad_grid("point " + m.str() + " outside box " + grid_.box().str());
        const std::size_t k = grid_.box().index_of(m);
        if (seen_[k])
            bad_grid("point " + m.str() + " listed twice");
        seen_[k] = true;
        ++count_;
        grid_.set(m, std::move(value));
    }

    GridFunction finish() const
    {
        if (count_ != grid_.box().size())
            bad_grid("box " + grid_.box().str() + " has " + std::to_string(grid_.box().size()) + " points but "
                     + std::to_string(count_) + " values were given");
        return grid_;
    }

private:
    GridFunction grid_;
    std::vector<bool> seen_;
    std::size_t count_ = 0;
};

std::vector<std::string> split_commas(const std::string& line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

std::vector<GridRecord> read_csv(std::istream& is)
{
    struct Pending {
        std::optional<std::size_t> nvars;
        std::optional<std::string> symbol, box, signature, policy;
        std::optional<GridBuilder> builder;
    };

    std::vector<GridRecord> out;
    std::optional<Pending> cur;
    std::size_t line_no = 0;

    auto flush = [&]() {
        if (!cur)
            return;
        if (!cur->builder)
            bad_grid("block without a column header line");
        out.push_back(GridRecord{*cur->symbol, cur->builder->finish(), cur->signature, cur->policy, std::nullopt});
        cur.reset();
    };

    std::string line;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (line.empty())
            continue;
        if (line == kCsvMagic) {
            flush();
            cur.emplace();
            continue;
        }
        if (!cur)
            bad_grid(where + "expected '" + kCsvMagic + "'");
        if (line.rfind("# ", 0) == 0) {
            if (cur->builder)
                bad_grid(where + "header line after data");
            const auto colon = line.find(": ");
            if (colon == std::string::npos)
                bad_grid(where + "malformed header");
            const std::string key = line.substr(2, colon - 2);
            const std::string value = line.substr(colon + 2);
            if (key == "nvars")
                cur->nvars = static_cast<std::size_t>(std::stoul(value));
            else if (key == "symbol")
                cur->symbol = value;
            else if (key == "box")
                cur->box = value;
            else if (key == "signature")
                cur->signature = value;
            else if (key == "policy")
                cur->policy = value;
            continue; // verification and unknown keys are informational
        }
        if (!cur->builder) {
            if (!cur->symbol || !cur->box)
                bad_grid(where + "block lacks symbol or box header");
            Box box = Box::parse(*cur->box);
            if (cur->nvars && *cur->nvars != box.num_vars())
                bad_grid(where + "nvars disagrees with box");
            const auto cols = split_commas(line);
            if (cols.size() < box.num_vars() + 1 || cols[box.num_vars()] != "value")
                bad_grid(where + "expected column header m1,...,value");
            cur->builder.emplace(std::move(box));
            continue;
        }
        const auto cols = split_commas(line);
        const std::size_t n = cur->nvars.value_or(Box::parse(*cur->box).num_vars());
        if (cols.size() < n + 1)
            bad_grid(where + "too few columns");
        LatticePoint m(n);
        try {
            for (std::size_t i = 0; i < n; ++i)
                m[i] = std::stoi(cols[i]);
            cur->builder->put(m, Rational::parse(cols[n]));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SyntaxError)
                throw;
            bad_grid(where + e.what());
        } catch (const std::exception&) {
            bad_grid(where + "malformed data row");
        }
    }
    flush();
    if (out.empty())
        bad_grid("no grid found");
    return out;
}

std::vector<GridRecord> read_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad_grid(e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != kJsonFormat || !doc.contains("grids"))
        bad_grid("not a latgreen-grid JSON document");

    std::vector<GridRecord> out;
    try {
        for (const auto& g : doc.at("grids")) {
            Box box = Box::parse(g.at("box").get<std::string>());
            if (g.contains("nvars") && g.at("nvars").get<std::size_t>() != box.num_vars())
                bad_grid("nvars disagrees with box");
            GridBuilder builder(box);
            for (const auto& entry : g.at("values")) {
                const auto coords = entry.at("m").get<std::vector<int>>();
                if (coords.size() != box.num_vars())
                    bad_grid("point with wrong arity");
                builder.put(LatticePoint(coords), Rational::parse(entry.at("value").get<std::string>()));
            }
            GridRecord rec{g.at("symbol").get<std::string>(), builder.finish(), std::nullopt, std::nullopt,
                           std::nullopt};
            if (g.contains("signature"))
                rec.signature = g.at("signature").get<std::string>();
            if (g.contains("policy"))
                rec.policy = g.at("policy").get<std::string>();
            out.push_back(std::move(rec));
        }
    } catch (const nlohmann::json::exception& e) {
        bad_grid(e.what());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SyntaxError)
            throw;
        bad_grid(e.what());
    }
    if (out.empty())
        bad_grid("no grid found");
    return out;
}

} // namespace

std::string verification_summary(const VerificationReport& report)
{
    return std::string(report.passed ? "PASS" : "FAIL") + " interior=" + report.interior.str()
           + " violations=" + std::to_string(report.violations.size());
}

void write_grids(std::ostream& os, const std::vector<GridRecord>& records, GridFormat format, bool approx)
{
    if (format == GridFormat::Csv)
        write_csv(os, records, approx);
    else
        write_json(os, records, approx);
}

std::vector<GridRecord> read_grids(std::istream& is)
{
    const std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return read_json(text);
    std::istringstream ss(text);
    return read_csv(ss);
}

} // namespace latgreen
