#ifndef LATGREEN_TOOLS_CLI_HPP
#define LATGREEN_TOOLS_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latgreen/error.hpp"
#include "latgreen/grid_io.hpp"

namespace latgreen::cli {

enum class Command { Symbol, Fs, FsAll, Duality, Verify, Polybasis };

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitConfigError = 2,
    kExitDomainError = 3,
};

struct RunConfig {
    Command command = Command::Symbol;
    std::string op; ///< expression, JSON term list, or "@path" to either
    std::optional<std::size_t> nvars;
    std::optional<std::string> box;
    std::optional<std::string> signature;
    std::optional<std::string> policy;
    std::optional<unsigned> max_degree;
    GridFormat format = GridFormat::Csv;
    std::optional<std::string> out_path;
    std::optional<std::string> grid_path; ///< input of `verify`
    bool approx = false;
    bool parallel = true;
};

/// Exit code for an error raised by the library.
int exit_code_for(ErrorKind kind);

/**
 * Executes one command. The primary output (grid document, symbol, basis,
 * or the verify report) goes to `out` or to the --out file; per-grid
 * verification lines of fs, fs-all and duality go to `err`, as do
 * diagnostics. Returns the process exit code.
 */
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs; usage errors exit with kExitConfigError.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace latgreen::cli

#endif // LATGREEN_TOOLS_CLI_HPP
