#pragma once

#include <string>
#include <vector>

#include "sgn/analysis.hpp"
#include "sgn/dynamics.hpp"

namespace sgn {

inline constexpr const char* kDiagnosticsHeader = "t,mass,px,py,energy,hmin,hmax,gmres_iters";

/// Writes the header and one row per entry, doubles at 17 significant digits.
void export_diagnostics(const std::string& path, const std::vector<Diagnostics>& rows);

/// Inverse of export_diagnostics; throws FormatError on malformed input.
std::vector<Diagnostics> import_diagnostics(const std::string& path);

/// Numeric CSV with a header row, column-major.
struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;

  const std::vector<double>& column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

/// (t, column) pairs from a CSV holding a `t` column, e.g. hmin.
TimeSeries read_series(const std::string& path, const std::string& column = "hmin");

/// Writes `t,<name>` rows.
void write_series(const std::string& path, const TimeSeries& s, const std::string& name = "hmin");

}  // namespace sgn
