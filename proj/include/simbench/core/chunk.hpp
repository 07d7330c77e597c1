#pragma once

#include <vector>

#include "simbench/core/stack.hpp"

namespace simbench {

/// A run of c consecutive z-planes: 7c raw frames in, 3c high-resolution
/// target frames (2x lateral size) out.
struct Chunk {
  int plane_index = 0;  // first raw plane covered
  int chunk_size = 0;   // c
  int in_nx = 0, in_ny = 0;
  int out_nx = 0, out_ny = 0;
  std::vector<Image2D> input;   // 7c frames
  std::vector<Image2D> target;  // 3c frames

  double input_mean() const;
};

/// Split into non-overlapping runs of c consecutive planes (incomplete
/// tail dropped) and drop chunks whose input mean falls below
/// discard_threshold. Requires target.nz == 3 * raw.planes and target
/// lateral dims == 2x raw lateral dims.
std::vector<Chunk> chunk_split(const RawSimStack& raw, const Stack3D& target,
                               int c, double discard_threshold = 1e-7);

}  // namespace simbench
