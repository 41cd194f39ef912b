#include "cavityberry/cli_support.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

namespace cavityberry {

std::string fmt17(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double_strict(const std::string& token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last)
    throw ValidationError("cannot parse number '" + token + "'");
  return value;
}

namespace {

int parse_int_strict(const std::string& token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last)
    throw ValidationError("cannot parse integer '" + token + "'");
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Grid parse_grid_spec(const std::string& spec) {
  const auto axes = split(spec, ',');
  if (axes.size() != 2)
    throw ValidationError("grid spec must be 'xmin:xmax:nx,pmin:pmax:np'");
  double lo[2], hi[2];
  int n[2];
  for (int a = 0; a < 2; ++a) {
    const auto parts = split(axes[a], ':');
    if (parts.size() != 3)
      throw ValidationError("grid axis must be 'min:max:count'");
    lo[a] = parse_double_strict(parts[0]);
    hi[a] = parse_double_strict(parts[1]);
    n[a] = parse_int_strict(parts[2]);
  }
  return Grid(lo[0], hi[0], n[0], lo[1], hi[1], n[1]);
}

SweepSpec parse_sweep_spec(const std::string& spec) {
  const size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw ValidationError("sweep spec must be 'key=lo:hi:count' or 'key=value'");
  SweepSpec out;
  out.key = spec.substr(0, eq);
  const auto parts = split(spec.substr(eq + 1), ':');
  if (parts.size() == 1) {
    out.values.push_back(parse_double_strict(parts[0]));
  } else if (parts.size() == 3) {
    const double lo = parse_double_strict(parts[0]);
    const double hi = parse_double_strict(parts[1]);
    const int count = parse_int_strict(parts[2]);
    if (count < 1) throw ValidationError("sweep count must be >= 1");
    if (count == 1) {
      out.values.push_back(lo);
    } else {
      for (int k = 0; k < count; ++k)
        out.values.push_back(lo + (hi - lo) * double(k) / double(count - 1));
    }
  } else {
    throw ValidationError("sweep spec must be 'key=lo:hi:count' or 'key=value'");
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> out;
  for (const auto& token : split(spec, ',')) {
    const int value = parse_int_strict(token);
    if (value < 1) throw ValidationError("list entries must be positive");
    out.push_back(value);
  }
  return out;
}

void write_csv(const std::string& path, const CsvRow& header, const std::vector<CsvRow>& rows) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open output file '" + path + "'");
  const auto emit = [&](const CsvRow& row) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) file << ',';
      file << row[i];
    }
    file << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  if (!file) throw Error("failed writing '" + path + "'");
}

}  // namespace cavityberry
