#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace simbench {

/// 3D voxel grid with physical voxel spacing in nanometers.
/// Layout is row-major with x fastest: index = x + nx*(y + ny*z).
struct Stack3D {
  int nx = 0, ny = 0, nz = 0;
  double dx_nm = 0.0, dy_nm = 0.0, dz_nm = 0.0;
  std::vector<double> voxels;

  Stack3D() = default;
  Stack3D(int nx_, int ny_, int nz_, double dx, double dy, double dz)
      : nx(nx_), ny(ny_), nz(nz_), dx_nm(dx), dy_nm(dy), dz_nm(dz),
        voxels(static_cast<std::size_t>(nx_) * ny_ * nz_, 0.0) {}

  std::size_t size() const { return voxels.size(); }
  std::size_t index(int x, int y, int z) const {
    return static_cast<std::size_t>(x) +
           static_cast<std::size_t>(nx) *
               (static_cast<std::size_t>(y) + static_cast<std::size_t>(ny) * z);
  }
  double& at(int x, int y, int z) { return voxels[index(x, y, z)]; }
  double at(int x, int y, int z) const { return voxels[index(x, y, z)]; }

  bool same_dims(const Stack3D& o) const {
    return nx == o.nx && ny == o.ny && nz == o.nz;
  }

  /// Throws std::invalid_argument on empty dims, non-positive spacing or
  /// non-finite voxels.
  void validate() const;
};

/// Single 2D frame, x fastest.
struct Image2D {
  int nx = 0, ny = 0;
  std::vector<double> pixels;

  Image2D() = default;
  Image2D(int nx_, int ny_)
      : nx(nx_), ny(ny_), pixels(static_cast<std::size_t>(nx_) * ny_, 0.0) {}

  double& at(int x, int y) { return pixels[static_cast<std::size_t>(x) + static_cast<std::size_t>(nx) * y]; }
  double at(int x, int y) const { return pixels[static_cast<std::size_t>(x) + static_cast<std::size_t>(nx) * y]; }
};

/// Raw structured-illumination acquisition: 7 phase-stepped frames per
/// z-plane, plane-major frame-minor ordering.
struct RawSimStack {
  int planes = 0;
  int frames_per_plane = 7;
  int nx = 0, ny = 0;
  double lateral_nm = 0.0;
  double dz_nm = 0.0;
  std::vector<Image2D> frames;

  Image2D& frame(int plane, int t) { return frames[static_cast<std::size_t>(plane) * frames_per_plane + t]; }
  const Image2D& frame(int plane, int t) const { return frames[static_cast<std::size_t>(plane) * frames_per_plane + t]; }
  int total_frames() const { return planes * frames_per_plane; }
  void validate() const;

  double mean_pixel() const;
  double sum() const;
};

/// Rescale to [0,1]; a constant stack maps to all zeros.
Stack3D normalize_unit_range(const Stack3D& s);
RawSimStack normalize_unit_range(const RawSimStack& s);

/// Elementwise max(v, 0).
Stack3D truncate_negatives(const Stack3D& s);

double stack_min(const Stack3D& s);
double stack_max(const Stack3D& s);
double stack_mean(const Stack3D& s);

/// View a RawSimStack as one 3D stack (nz = planes * frames_per_plane).
Stack3D raw_as_stack(const RawSimStack& raw);
RawSimStack stack_as_raw(const Stack3D& s, int frames_per_plane);

}  // namespace simbench
