#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bvp::fft {

// Unscaled forward DFT:  X[k] = sum_n x[n] e^{-2*pi*i*n*k/N}.
// The inverse applies the 1/N factor. Power-of-two sizes run the radix-2
// path directly; other sizes go through Bluestein's chirp-z convolution.
// Per-size twiddle/chirp plans are cached per thread.
std::vector<std::complex<double>> transform(std::vector<std::complex<double>> x);
std::vector<std::complex<double>> inverse(std::vector<std::complex<double>> x);

// In-place radix-2 transform; n must be a power of two.
void transform_pow2(std::complex<double>* a, std::size_t n, bool invert);

} // namespace bvp::fft
