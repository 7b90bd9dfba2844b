#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "cli.hpp"

using namespace latgreen;
using namespace latgreen::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_args(std::vector<std::string> args)
{
    args.insert(args.begin(), "latgreen");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::size_t count(const std::string& haystack, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1))
        ++n;
    return n;
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("latgreen_test_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const std::string kLaplacian = "1 - 1/4*(z1 + 1/z1 + z2 + 1/z2)";

} // namespace

TEST(Cli, Symbol)
{
    const auto r = run_args({"symbol", "--op", kLaplacian});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "-1/4*z1 - 1/4*z2 + 1 - 1/4*1/z2 - 1/4*1/z1\n");
    const auto j = run_args({"symbol", "--op", "z1 - 1", "--format", "json"});
    EXPECT_NE(j.out.find("\"symbol\": \"z1 - 1\""), std::string::npos);
}

TEST(Cli, FsAllForwardDifference)
{
    const auto r = run_args({"fs-all", "--op", "z1 - 1", "--box", "-3:3"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(count(r.out, "# latgreen grid"), 2u);
    EXPECT_EQ(count(r.err, "PASS"), 2u);
    EXPECT_NE(r.out.find("# signature: 1;+\n"), std::string::npos);
    EXPECT_NE(r.out.find("# signature: 1;-\n"), std::string::npos);
}

TEST(Cli, FsAllLaplacian)
{
    const auto r = run_args({"fs-all", "--op", kLaplacian, "--box", "-5:5,-5:5"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(count(r.out, "# latgreen grid"), 8u);
    EXPECT_EQ(count(r.err, "PASS interior=-4:4,-4:4 violations=0"), 8u);
}

TEST(Cli, FsWithSignatureAndJson)
{
    const auto r = run_args({"fs", "--op", kLaplacian, "--box", "-3:3,-3:3", "--sig", "2,1;-,+", "--format", "json"});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("\"signature\": \"2,1;-,+\""), std::string::npos);
    EXPECT_EQ(r.out.find('.'), std::string::npos) << "decimal output without --approx";
}

TEST(Cli, Determinism)
{
    const auto a = run_args({"fs-all", "--op", kLaplacian, "--box", "-4:4,-4:4"});
    const auto b = run_args({"fs-all", "--op", kLaplacian, "--box", "-4:4,-4:4"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
    const auto c = run_args({"duality", "--op", kLaplacian, "--box", "-4:4,-4:4", "--policy", "seed:7"});
    const auto d = run_args({"duality", "--op", kLaplacian, "--box", "-4:4,-4:4", "--policy", "seed:7"});
    EXPECT_EQ(c.code, kExitOk);
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, VerifyRoundTripAndTamper)
{
    const auto grid = temp_path("grid.csv");
    const auto r = run_args({"fs", "--op", "z1 - 1", "--box", "-3:3", "--out", grid.string()});
    ASSERT_EQ(r.code, kExitOk);
    const auto ok = run_args({"verify", grid.string()});
    EXPECT_EQ(ok.code, kExitOk) << ok.out << ok.err;
    EXPECT_NE(ok.out.find("PASS"), std::string::npos);

    std::string text = slurp(grid);
    const auto pos = text.find("\n2,1\n");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 5, "\n2,7\n");
    std::ofstream(grid, std::ios::binary) << text;
    const auto bad = run_args({"verify", grid.string()});
    EXPECT_EQ(bad.code, kExitVerificationFailed);
    EXPECT_NE(bad.out.find("violation at m=(1)"), std::string::npos) << bad.out;
    EXPECT_NE(bad.out.find("violation at m=(2)"), std::string::npos) << bad.out;
    std::filesystem::remove(grid);
}

TEST(Cli, VerifyJson)
{
    const auto grid = temp_path("grid.json");
    ASSERT_EQ(run_args({"duality", "--op", kLaplacian, "--box", "-3:3,-3:3", "--format", "json", "--out",
                        grid.string()})
                  .code,
              kExitOk);
    EXPECT_EQ(run_args({"verify", grid.string()}).code, kExitOk);
    std::filesystem::remove(grid);
}

TEST(Cli, Polybasis)
{
    const auto r = run_args({"polybasis", "--op", "z1 - 1", "--maxdeg", "3"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("# dimension: 1\n"), std::string::npos);
    EXPECT_NE(r.out.find("1,1\n"), std::string::npos);
    const auto lap = run_args({"polybasis", "--op", kLaplacian, "--maxdeg", "3", "--format", "json"});
    EXPECT_NE(lap.out.find("\"dimension\": 7"), std::string::npos);
}

TEST(Cli, OperatorFromFile)
{
    const auto file = temp_path("op.json");
    std::ofstream(file) << R"([{"alpha": [1], "coeff": 1}, {"alpha": [0], "coeff": -1}])";
    const auto r = run_args({"symbol", "--op", "@" + file.string()});
    EXPECT_EQ(r.out, "z1 - 1\n");
    std::filesystem::remove(file);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run_args({"symbol", "--op", "z1 +"}).code, kExitConfigError);
    EXPECT_EQ(run_args({"symbol", "--op", "z3", "--nvars", "2"}).code, kExitConfigError);
    EXPECT_EQ(run_args({"fs", "--op", "z1 - 1"}).code, kExitConfigError);
    EXPECT_EQ(run_args({"bogus"}).code, kExitConfigError);
    EXPECT_EQ(run_args({"fs", "--op", "z1 - 1", "--box", "-3:3", "--format", "xml"}).code, kExitConfigError);
    EXPECT_EQ(run_args({"fs", "--op", "z1 - 1", "--box", "1,2"}).code, kExitConfigError);
    EXPECT_EQ(run_args({"verify", temp_path("missing").string()}).code, kExitConfigError);

    const auto zero = run_args({"symbol", "--op", "z1 - z1"});
    EXPECT_EQ(zero.code, kExitDomainError);
    EXPECT_EQ(zero.err.rfind("latgreen: ZeroOperator", 0), 0u) << zero.err;
    EXPECT_EQ(run_args({"fs", "--op", "z1 - 1", "--box", "2:6"}).code, kExitDomainError);
    EXPECT_EQ(run_args({"duality", "--op", "z1^4 + 1", "--box", "0:2"}).code, kExitDomainError);
}

TEST(Cli, Binary)
{
    const auto out = temp_path("bin.txt");
    const std::string cmd = std::string("\"") + LATGREEN_BINARY + "\" fs-all --op \"z1 - 1\" --box -3:3 > \"" +
                            out.string() + "\" 2>/dev/null";
    EXPECT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_EQ(count(slurp(out), "# verification: PASS"), 2u);
    const std::string fail = std::string("\"") + LATGREEN_BINARY + "\" symbol --op \"z1 - z1\" 2>/dev/null";
    const int status = std::system(fail.c_str());
    EXPECT_TRUE(WIFEXITED(status));
    EXPECT_EQ(WEXITSTATUS(status), kExitDomainError);
    std::filesystem::remove(out);
}
