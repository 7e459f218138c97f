#include "qcflow/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace qcflow {
namespace {

// FFTW's planner is not thread safe; executing a plan on fresh buffers is.
// Plans are created once per (size, direction) with FFTW_UNALIGNED so they can
// run on any caller buffer via fftw_execute_dft.
std::mutex g_plan_mutex;

fftw_plan plan_for(std::size_t n, int sign) {
  static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<cplx> tmp(n);
  fftw_plan p = fftw_plan_dft_1d(
      static_cast<int>(n), reinterpret_cast<fftw_complex*>(tmp.data()),
      reinterpret_cast<fftw_complex*>(tmp.data()), sign,
      FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache.emplace(key, p);
  return p;
}

std::vector<cplx> run(const std::vector<cplx>& in, int sign) {
  if (in.empty()) throw std::invalid_argument("fft: empty input");
  std::vector<cplx> out(in);
  fftw_plan p = plan_for(in.size(), sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(out.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

std::vector<cplx> dft(const std::vector<cplx>& in) { return run(in, FFTW_FORWARD); }

std::vector<cplx> idft(const std::vector<cplx>& in) {
  std::vector<cplx> out = run(in, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(in.size());
  for (auto& v : out) v *= scale;
  return out;
}

}  // namespace qcflow
