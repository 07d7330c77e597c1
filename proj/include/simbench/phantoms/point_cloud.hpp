#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace simbench {

struct Emitter {
  double x_nm = 0.0, y_nm = 0.0, z_nm = 0.0;
  double intensity = 1.0;
};

struct Box3 {
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0, z_lo = 0, z_hi = 0;
  bool contains(double x, double y, double z) const {
    return x >= x_lo && x <= x_hi && y >= y_lo && y <= y_hi && z >= z_lo && z <= z_hi;
  }
};

/// Weighted 3D emitter positions in nanometers, coordinates relative to
/// the stack center.
struct PointCloud {
  std::vector<Emitter> emitters;
  Box3 bounds;

  double total_intensity() const;
  /// Throws when an emitter escapes the bounds, has negative intensity
  /// or a non-finite coordinate.
  void validate() const;
  /// Shift so the bounding-box center sits at the origin.
  PointCloud recentered() const;
};

/// CSV with header `x_nm,y_nm,z_nm,intensity`.
void write_point_csv(const PointCloud& cloud, const std::filesystem::path& path);

/// Reads emitter CSVs with header-driven column mapping. Accepts our own
/// x_nm/y_nm/z_nm/intensity header as well as SMLM-challenge style
/// headers (xnano/ynano/znano, "x [nm]" etc). unit_scale converts the
/// file's coordinate unit to nanometers (1.0 = already nm).
PointCloud load_point_csv(const std::filesystem::path& path, double unit_scale = 1.0);

}  // namespace simbench
