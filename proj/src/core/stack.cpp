#include "simbench/core/stack.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace simbench {

void Stack3D::validate() const {
  if (nx < 1 || ny < 1 || nz < 1)
    throw std::invalid_argument("Stack3D: dims must be >= 1");
  if (!(dx_nm > 0.0) || !(dy_nm > 0.0) || !(dz_nm > 0.0))
    throw std::invalid_argument("Stack3D: spacing must be strictly positive");
  if (voxels.size() != static_cast<std::size_t>(nx) * ny * nz)
    throw std::invalid_argument("Stack3D: voxel count does not match dims");
  for (double v : voxels)
    if (!std::isfinite(v))
      throw std::invalid_argument("Stack3D: non-finite voxel value");
}

void RawSimStack::validate() const {
  if (planes < 1 || frames_per_plane < 1)
    throw std::invalid_argument("RawSimStack: empty stack");
  if (frames.size() != static_cast<std::size_t>(planes) * frames_per_plane)
    throw std::invalid_argument("RawSimStack: frame count != planes * frames_per_plane");
  for (const Image2D& f : frames)
    if (f.nx != nx || f.ny != ny)
      throw std::invalid_argument("RawSimStack: frames do not share dimensions");
}

double RawSimStack::mean_pixel() const {
  double s = 0.0;
  std::size_t n = 0;
  for (const Image2D& f : frames) {
    for (double v : f.pixels) s += v;
    n += f.pixels.size();
  }
  return n ? s / static_cast<double>(n) : 0.0;
}

double RawSimStack::sum() const {
  double s = 0.0;
  for (const Image2D& f : frames)
    for (double v : f.pixels) s += v;
  return s;
}

namespace {

void normalize_span(std::vector<double>& v, double lo, double hi) {
  if (hi > lo) {
    const double inv = 1.0 / (hi - lo);
    for (double& x : v) x = (x - lo) * inv;
  } else {
    std::fill(v.begin(), v.end(), 0.0);
  }
}

}  // namespace

Stack3D normalize_unit_range(const Stack3D& s) {
  Stack3D out = s;
  normalize_span(out.voxels, stack_min(s), stack_max(s));
  return out;
}

RawSimStack normalize_unit_range(const RawSimStack& s) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (const Image2D& f : s.frames)
    for (double v : f.pixels) { lo = std::min(lo, v); hi = std::max(hi, v); }
  RawSimStack out = s;
  for (Image2D& f : out.frames) normalize_span(f.pixels, lo, hi);
  return out;
}

Stack3D truncate_negatives(const Stack3D& s) {
  Stack3D out = s;
  for (double& v : out.voxels) v = std::max(v, 0.0);
  return out;
}

double stack_min(const Stack3D& s) {
  return *std::min_element(s.voxels.begin(), s.voxels.end());
}

double stack_max(const Stack3D& s) {
  return *std::max_element(s.voxels.begin(), s.voxels.end());
}

double stack_mean(const Stack3D& s) {
  double acc = 0.0;
  for (double v : s.voxels) acc += v;
  return s.voxels.empty() ? 0.0 : acc / static_cast<double>(s.voxels.size());
}

Stack3D raw_as_stack(const RawSimStack& raw) {
  Stack3D s(raw.nx, raw.ny, raw.total_frames(), raw.lateral_nm, raw.lateral_nm, raw.dz_nm);
  std::size_t off = 0;
  for (const Image2D& f : raw.frames) {
    std::copy(f.pixels.begin(), f.pixels.end(), s.voxels.begin() + off);
    off += f.pixels.size();
  }
  return s;
}

RawSimStack stack_as_raw(const Stack3D& s, int frames_per_plane) {
  if (frames_per_plane < 1 || s.nz % frames_per_plane != 0)
    throw std::invalid_argument("stack_as_raw: nz not divisible by frames_per_plane");
  RawSimStack raw;
  raw.planes = s.nz / frames_per_plane;
  raw.frames_per_plane = frames_per_plane;
  raw.nx = s.nx;
  raw.ny = s.ny;
  raw.lateral_nm = s.dx_nm;
  raw.dz_nm = s.dz_nm;
  raw.frames.reserve(s.nz);
  const std::size_t fsz = static_cast<std::size_t>(s.nx) * s.ny;
  for (int z = 0; z < s.nz; ++z) {
    Image2D f(s.nx, s.ny);
    std::copy(s.voxels.begin() + z * fsz, s.voxels.begin() + (z + 1) * fsz, f.pixels.begin());
    raw.frames.push_back(std::move(f));
  }
  return raw;
}

}  // namespace simbench
