#include "simbench/core/fft.hpp"

#include <fftw3.h>

#include <array>
#include <map>
#include <mutex>

namespace simbench {
namespace fft {

namespace {

// fftw_plan creation/destruction is not thread-safe; executing distinct
// plans is. Plans use FFTW_UNALIGNED so they run on any buffer.
std::mutex g_plan_mutex;

struct PlanKey {
  std::array<int, 3> dims;  // unused dims = 0
  int sign;
  bool operator<(const PlanKey& o) const {
    if (dims != o.dims) return dims < o.dims;
    return sign < o.sign;
  }
};

fftw_plan get_plan(const PlanKey& key) {
  static std::map<PlanKey, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::vector<cplx> scratch;
  std::size_t total = 1;
  int rank = 0;
  int n[3];
  for (int d : key.dims)
    if (d > 0) {
      n[rank++] = d;
      total *= static_cast<std::size_t>(d);
    }
  scratch.resize(total);
  fftw_complex* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  fftw_plan plan = fftw_plan_dft(rank, n, buf, buf, key.sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, plan);
  return plan;
}

void run(cplx* data, std::array<int, 3> dims, int sign, bool normalize) {
  fftw_plan plan = get_plan({dims, sign});
  fftw_complex* buf = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(plan, buf, buf);
  if (normalize) {
    std::size_t total = 1;
    for (int d : dims)
      if (d > 0) total *= static_cast<std::size_t>(d);
    const double inv = 1.0 / static_cast<double>(total);
    for (std::size_t i = 0; i < total; ++i) data[i] *= inv;
  }
}

}  // namespace

void fft_1d(cplx* data, int n) { run(data, {n, 0, 0}, FFTW_FORWARD, false); }
void ifft_1d(cplx* data, int n) { run(data, {n, 0, 0}, FFTW_BACKWARD, true); }

// FFTW's last dimension is contiguous; our x axis is contiguous.
void fft_2d(cplx* data, int nx, int ny) { run(data, {ny, nx, 0}, FFTW_FORWARD, false); }
void ifft_2d(cplx* data, int nx, int ny) { run(data, {ny, nx, 0}, FFTW_BACKWARD, true); }

void fft_3d(cplx* data, int nx, int ny, int nz) { run(data, {nz, ny, nx}, FFTW_FORWARD, false); }
void ifft_3d(cplx* data, int nx, int ny, int nz) { run(data, {nz, ny, nx}, FFTW_BACKWARD, true); }

ComplexImage fft_image(const Image2D& img) {
  ComplexImage out(img.nx, img.ny);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) out.values[i] = img.pixels[i];
  fft_2d(out.values.data(), out.nx, out.ny);
  return out;
}

Image2D ifft_image_real(const ComplexImage& spec) {
  std::vector<cplx> work = spec.values;
  ifft_2d(work.data(), spec.nx, spec.ny);
  Image2D out(spec.nx, spec.ny);
  for (std::size_t i = 0; i < work.size(); ++i) out.pixels[i] = work[i].real();
  return out;
}

std::vector<cplx> fft_stack(const Stack3D& s) {
  std::vector<cplx> out(s.voxels.size());
  for (std::size_t i = 0; i < s.voxels.size(); ++i) out[i] = s.voxels[i];
  fft_3d(out.data(), s.nx, s.ny, s.nz);
  return out;
}

}  // namespace fft
}  // namespace simbench
