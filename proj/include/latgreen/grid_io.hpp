#ifndef LATGREEN_GRID_IO_HPP
#define LATGREEN_GRID_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latgreen/grid.hpp"
#include "latgreen/lattice.hpp"

namespace latgreen {

/// One grid plus the metadata needed to re-verify it standalone.
struct GridRecord {
    std::string symbol; ///< canonical symbol text of the operator
    GridFunction grid;
    std::optional<std::string> signature; ///< e.g. "1,2;+,-" for series solutions
    std::optional<std::string> policy;    ///< e.g. "seed:7" for windowed linear solutions
    std::optional<VerificationReport> verification;
};

enum class GridFormat { Csv, Json };

/**
 * CSV: one block per grid,
 *
 *     # latgreen grid
 *     # nvars: 2
 *     # symbol: -1/4*z1 - 1/4*z2 + 1 - 1/4*1/z2 - 1/4*1/z1
 *     # box: -5:5,-5:5
 *     # signature: 1,2;+,+
 *     # verification: PASS interior=-4:4,-4:4 violations=0
 *     m1,m2,value
 *     -5,-5,0
 *     ...
 *
 * blocks separated by an empty line. JSON: {"format": "latgreen-grid",
 * "version": 1, "grids": [...]}, see README for the schema. Values are exact
 * "p/q" strings; `approx` adds a display-only decimal column/field.
 */
void write_grids(std::ostream& os, const std::vector<GridRecord>& records, GridFormat format, bool approx = false);

/// Reads either format (detected from the first non-blank character).
/// Stored verification results are not read back. Raises SyntaxError.
std::vector<GridRecord> read_grids(std::istream& is);

std::string verification_summary(const VerificationReport& report);

} // namespace latgreen

#endif // LATGREEN_GRID_IO_HPP
