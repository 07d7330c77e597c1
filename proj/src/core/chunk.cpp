#include "simbench/core/chunk.hpp"

#include <algorithm>
#include <stdexcept>

namespace simbench {

double Chunk::input_mean() const {
  double s = 0.0;
  std::size_t n = 0;
  for (const Image2D& f : input) {
    for (double v : f.pixels) s += v;
    n += f.pixels.size();
  }
  return n ? s / static_cast<double>(n) : 0.0;
}

std::vector<Chunk> chunk_split(const RawSimStack& raw, const Stack3D& target,
                               int c, double discard_threshold) {
  if (c < 1) throw std::invalid_argument("chunk_split: chunk size must be >= 1");
  if (target.nz != 3 * raw.planes)
    throw std::invalid_argument("chunk_split: target planes != 3 x raw planes");
  if (target.nx != 2 * raw.nx || target.ny != 2 * raw.ny)
    throw std::invalid_argument("chunk_split: target lateral dims != 2 x raw dims");

  const std::size_t slice = static_cast<std::size_t>(target.nx) * target.ny;
  std::vector<Chunk> chunks;
  for (int start = 0; start + c <= raw.planes; start += c) {
    Chunk ch;
    ch.plane_index = start;
    ch.chunk_size = c;
    ch.in_nx = raw.nx;
    ch.in_ny = raw.ny;
    ch.out_nx = target.nx;
    ch.out_ny = target.ny;
    for (int p = start; p < start + c; ++p)
      for (int t = 0; t < raw.frames_per_plane; ++t)
        ch.input.push_back(raw.frame(p, t));
    for (int z = 3 * start; z < 3 * (start + c); ++z) {
      Image2D f(target.nx, target.ny);
      std::copy(target.voxels.begin() + z * slice,
                target.voxels.begin() + (z + 1) * slice, f.pixels.begin());
      ch.target.push_back(std::move(f));
    }
    if (ch.input_mean() >= discard_threshold) chunks.push_back(std::move(ch));
  }
  return chunks;
}

}  // namespace simbench
