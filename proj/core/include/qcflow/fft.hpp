// Thin FFT layer (FFTW3 behind a mutex-guarded plan cache).
#pragma once

#include <vector>

#include "qcflow/math_util.hpp"

namespace qcflow {

// Unnormalized forward DFT: out[k] = sum_j in[j] exp(-2*pi*i*j*k/n).
std::vector<cplx> dft(const std::vector<cplx>& in);

// Normalized inverse: idft(dft(x)) == x.
std::vector<cplx> idft(const std::vector<cplx>& in);

}  // namespace qcflow
