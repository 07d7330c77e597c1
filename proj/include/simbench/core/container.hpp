#pragma once

#include <filesystem>
#include <string>

#include "simbench/core/stack.hpp"

namespace simbench {

/// On-disk stack container: a raw little-endian float32 payload (row
/// major, x fastest) plus a JSON sidecar `<path>.json` holding
/// {dims, spacing_nm, frames_per_plane, kind}.
struct ContainerMeta {
  int nx = 0, ny = 0, nz = 0;
  double dx_nm = 0.0, dy_nm = 0.0, dz_nm = 0.0;
  int frames_per_plane = 1;
  std::string kind = "stack";
};

void write_container(const Stack3D& s, const std::filesystem::path& path,
                     const std::string& kind = "stack", int frames_per_plane = 1);
Stack3D read_container(const std::filesystem::path& path);
ContainerMeta read_container_meta(const std::filesystem::path& path);

/// Raw SIM stacks travel as containers with kind "rawsim" and
/// frames_per_plane 7 (nz = planes * 7).
void write_raw_container(const RawSimStack& raw, const std::filesystem::path& path);
RawSimStack read_raw_container(const std::filesystem::path& path);

}  // namespace simbench
