#include "sgn/diagnostics_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>

#include "sgn/errors.hpp"

namespace sgn {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

File open_for_write(const std::string& path) {
  File f(std::fopen(path.c_str(), "w"));
  if (!f) throw FormatError("cannot write '" + path + "'");
  return f;
}

double parse_number(std::string_view s, const std::string& where) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw FormatError(where + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = line.find(',', pos);
    out.push_back(line.substr(pos, comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

void export_diagnostics(const std::string& path, const std::vector<Diagnostics>& rows) {
  File f = open_for_write(path);
  std::fprintf(f.get(), "%s\n", kDiagnosticsHeader);
  for (const Diagnostics& d : rows) {
    std::fprintf(f.get(), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n", d.t, d.mass, d.momentum_x, d.momentum_y,
                 d.energy, d.h_min, d.h_max, d.gmres_iterations);
  }
  if (std::ferror(f.get())) throw FormatError("write failed for '" + path + "'");
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return data[i];
  }
  throw FormatError("missing CSV column '" + name + "'");
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read '" + path + "'");
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw FormatError(path + ": empty file");
  for (auto c : split(line)) t.columns.emplace_back(c);
  t.data.resize(t.columns.size());
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto cells = split(line);
    const std::string where = path + ":" + std::to_string(row);
    if (cells.size() != t.columns.size()) throw FormatError(where + ": wrong number of fields");
    for (std::size_t i = 0; i < cells.size(); ++i) t.data[i].push_back(parse_number(cells[i], where));
  }
  return t;
}

std::vector<Diagnostics> import_diagnostics(const std::string& path) {
  const CsvTable t = read_csv(path);
  std::string header;
  for (std::size_t i = 0; i < t.columns.size(); ++i) header += (i ? "," : "") + t.columns[i];
  if (header != kDiagnosticsHeader) throw FormatError(path + ": unexpected header");
  std::vector<Diagnostics> rows(t.data[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Diagnostics& d = rows[r];
    d.t = t.data[0][r];
    d.mass = t.data[1][r];
    d.momentum_x = t.data[2][r];
    d.momentum_y = t.data[3][r];
    d.energy = t.data[4][r];
    d.h_min = t.data[5][r];
    d.h_max = t.data[6][r];
    d.gmres_iterations = static_cast<int>(t.data[7][r]);
  }
  return rows;
}

TimeSeries read_series(const std::string& path, const std::string& column) {
  const CsvTable t = read_csv(path);
  const auto& ts = t.column("t");
  const auto& vs = t.column(column);
  TimeSeries out(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) out[i] = {ts[i], vs[i]};
  return out;
}

void write_series(const std::string& path, const TimeSeries& s, const std::string& name) {
  File f = open_for_write(path);
  std::fprintf(f.get(), "t,%s\n", name.c_str());
  for (const SeriesPoint& p : s) std::fprintf(f.get(), "%.17g,%.17g\n", p.t, p.value);
  if (std::ferror(f.get())) throw FormatError("write failed for '" + path + "'");
}

}  // namespace sgn
