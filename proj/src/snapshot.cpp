#include "sgn/snapshot.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <vector>

#include "sgn/errors.hpp"

namespace sgn {

namespace {

constexpr char kMagic[4] = {'S', 'G', 'N', '2'};

template <class T>
void put(std::vector<char>& buf, T v) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, &v, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  buf.insert(buf.end(), bytes, bytes + sizeof(T));
}

template <class T>
T get(const char* p) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, p, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T v;
  std::memcpy(&v, bytes, sizeof(T));
  return v;
}

void put_field(std::vector<char>& buf, const RealField2D& f) {
  for (double v : f.values()) put(buf, v);
}

std::vector<char> slurp(const std::string& path, std::size_t limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open snapshot '" + path + "'");
  std::vector<char> data;
  char chunk[1 << 16];
  while (data.size() < limit && in.read(chunk, sizeof chunk).gcount() > 0) {
    data.insert(data.end(), chunk, chunk + in.gcount());
  }
  return data;
}

SnapshotHeader parse_header(const std::vector<char>& d, const std::string& path) {
  if (d.size() < kSnapshotHeaderBytes) throw FormatError(path + ": truncated header");
  if (std::memcmp(d.data(), kMagic, 4) != 0) throw FormatError(path + ": bad magic");
  SnapshotHeader h;
  const auto word = get<std::uint32_t>(d.data() + 4);
  h.version = word & 0xffffu;
  h.has_sigma = (word & kSnapshotSigmaFlag) != 0;
  if (h.version != kSnapshotVersion) throw FormatError(path + ": unsupported version " + std::to_string(h.version));
  if ((word & ~(0xffffu | kSnapshotSigmaFlag)) != 0) throw FormatError(path + ": unknown header flags");
  h.nx = get<std::uint64_t>(d.data() + 8);
  h.ny = get<std::uint64_t>(d.data() + 16);
  h.lx = get<double>(d.data() + 24);
  h.ly = get<double>(d.data() + 32);
  h.t = get<double>(d.data() + 40);
  h.g = get<double>(d.data() + 48);
  h.h_inf = get<double>(d.data() + 56);
  if (h.nx == 0 || h.ny == 0 || h.nx > (1u << 20) || h.ny > (1u << 20)) throw FormatError(path + ": bad grid size");
  for (double v : {h.lx, h.ly, h.t, h.g, h.h_inf}) {
    if (!std::isfinite(v)) throw FormatError(path + ": non-finite header value");
  }
  return h;
}

}  // namespace

void write_snapshot(const std::string& path, const State& s, const PhysicalParams& p) {
  const Grid& g = s.grid();
  std::vector<char> buf;
  const std::size_t arrays = s.sigma_current ? 4 : 3;
  buf.reserve(kSnapshotHeaderBytes + arrays * g.size() * sizeof(double));
  buf.insert(buf.end(), kMagic, kMagic + 4);
  put<std::uint32_t>(buf, kSnapshotVersion | (s.sigma_current ? kSnapshotSigmaFlag : 0u));
  put<std::uint64_t>(buf, g.nx());
  put<std::uint64_t>(buf, g.ny());
  for (double v : {g.lx(), g.ly(), s.t, p.g, p.h_inf}) put(buf, v);
  put_field(buf, s.h);
  put_field(buf, s.vx);
  put_field(buf, s.vy);
  if (s.sigma_current) put_field(buf, s.sigma);

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write '" + tmp + "'");
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw FormatError("write failed for '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw FormatError("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

SnapshotHeader read_snapshot_header(const std::string& path) {
  return parse_header(slurp(path, kSnapshotHeaderBytes), path);
}

Snapshot read_snapshot(const std::string& path) {
  const std::vector<char> d = slurp(path, SIZE_MAX);
  const SnapshotHeader h = parse_header(d, path);
  const std::size_t n = h.nx * h.ny;
  const std::size_t arrays = h.has_sigma ? 4 : 3;
  if (d.size() != kSnapshotHeaderBytes + arrays * n * sizeof(double)) {
    throw FormatError(path + ": payload size does not match header");
  }
  GridPtr grid;
  try {
    grid = make_grid(h.nx, h.ny, h.lx, h.ly);
  } catch (const ConfigError& e) {
    throw FormatError(path + ": " + e.what());
  }
  auto field = [&](std::size_t k) {
    RealField2D f(grid);
    const char* base = d.data() + kSnapshotHeaderBytes + k * n * sizeof(double);
    auto v = f.values();
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = get<double>(base + i * sizeof(double));
      if (!std::isfinite(v[i])) throw FormatError(path + ": non-finite payload value");
    }
    return f;
  };
  Snapshot s;
  s.physics = {h.g, h.h_inf};
  s.state.t = h.t;
  s.state.h = field(0);
  s.state.vx = field(1);
  s.state.vy = field(2);
  s.state.sigma = h.has_sigma ? field(3) : RealField2D(grid);
  s.state.sigma_current = h.has_sigma;
  return s;
}

}  // namespace sgn
