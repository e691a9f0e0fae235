#pragma once

#include <cstdint>
#include <string>

#include "sgn/dynamics.hpp"

namespace sgn {

/// Binary snapshot layout (little endian):
///
///   "SGN2" | u32 version | u64 nx | u64 ny | f64 lx, ly, t, g, h_inf
///   h[nx*ny] | vx[nx*ny] | vy[nx*ny] | sigma[nx*ny] if flagged
///
/// The low 16 bits of the version word hold the format version (1); bit 16
/// flags the sigma array.
inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::uint32_t kSnapshotSigmaFlag = 1u << 16;
inline constexpr std::size_t kSnapshotHeaderBytes = 64;

struct Snapshot {
  State state;
  PhysicalParams physics;
};

/// Writes to path + ".tmp" and renames over path. sigma is stored when
/// s.sigma_current is true.
void write_snapshot(const std::string& path, const State& s, const PhysicalParams& p);

/// Throws FormatError on a bad magic, version or flag, a size mismatch or
/// non-finite values.
Snapshot read_snapshot(const std::string& path);

struct SnapshotHeader {
  std::uint32_t version = 0;
  bool has_sigma = false;
  std::uint64_t nx = 0, ny = 0;
  double lx = 0, ly = 0, t = 0, g = 0, h_inf = 0;
};

SnapshotHeader read_snapshot_header(const std::string& path);

}  // namespace sgn
