#pragma once

#include <complex>
#include <vector>

#include "simbench/core/stack.hpp"

namespace simbench {

using cplx = std::complex<double>;

/// 2D complex image, x fastest (same layout as Image2D).
struct ComplexImage {
  int nx = 0, ny = 0;
  std::vector<cplx> values;

  ComplexImage() = default;
  ComplexImage(int nx_, int ny_)
      : nx(nx_), ny(ny_), values(static_cast<std::size_t>(nx_) * ny_) {}

  cplx& at(int x, int y) { return values[static_cast<std::size_t>(x) + static_cast<std::size_t>(nx) * y]; }
  cplx at(int x, int y) const { return values[static_cast<std::size_t>(x) + static_cast<std::size_t>(nx) * y]; }
};

namespace fft {

/// In-place transforms. Forward is unnormalized; inverse divides by the
/// total element count (so ifft(fft(x)) == x). Plans are cached per shape
/// and shared across threads.
void fft_1d(cplx* data, int n);
void ifft_1d(cplx* data, int n);
void fft_2d(cplx* data, int nx, int ny);
void ifft_2d(cplx* data, int nx, int ny);
void fft_3d(cplx* data, int nx, int ny, int nz);
void ifft_3d(cplx* data, int nx, int ny, int nz);

ComplexImage fft_image(const Image2D& img);
Image2D ifft_image_real(const ComplexImage& spec);

/// Forward 3D transform of a real stack.
std::vector<cplx> fft_stack(const Stack3D& s);

}  // namespace fft
}  // namespace simbench
