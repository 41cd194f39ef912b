#pragma once

#include "cavityberry/surfaces.hpp"
#include "cavityberry/types.hpp"

#include <string>
#include <vector>

namespace cavityberry {

/// Render a double with 17 significant digits, locale-independent.
std::string fmt17(double value);

/// Parse a double with std::from_chars; the whole token must be consumed.
double parse_double_strict(const std::string& token);

/// Grid spec "xmin:xmax:nx,pmin:pmax:np", parsed bit-exactly.
Grid parse_grid_spec(const std::string& spec);

/// Sweep spec "key=lo:hi:count" (inclusive linspace) or "key=value".
struct SweepSpec {
  std::string key;
  std::vector<double> values;
};

SweepSpec parse_sweep_spec(const std::string& spec);

/// Comma-separated positive integers, e.g. "256,512,1024".
std::vector<int> parse_int_list(const std::string& spec);

/// One CSV record; fields are written verbatim, joined with commas.
using CsvRow = std::vector<std::string>;

/// Write UTF-8, LF-terminated CSV with a header row.
void write_csv(const std::string& path, const CsvRow& header, const std::vector<CsvRow>& rows);

}  // namespace cavityberry
