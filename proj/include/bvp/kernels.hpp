#pragma once

#include <cstddef>
#include <string_view>

namespace bvp::kernels {

// Data-parallel inner loops used by the feature, noise and spectrum paths.
// Each operation has a scalar reference implementation plus SIMD variants
// (AVX2 on x86-64, NEON on aarch64) selected once at runtime. Variants are
// equivalence-tested against the scalar reference; they may differ from it
// only by floating-point summation order.
struct Ops {
    const char* name;

    // sum of x[0..n)
    double (*sum)(const double* x, std::size_t n);

    // sum of |x[i]|
    double (*sum_abs)(const double* x, std::size_t n);

    // minimum and maximum of x[0..n); n must be >= 1
    void (*min_max)(const double* x, std::size_t n, double* mn, double* mx);

    // sum_sq2 = sum (x[i]-mean)^2, sum_cu3 = sum (x[i]-mean)^3
    void (*central_moments)(const double* x, std::size_t n, double mean,
                            double* sum_sq2, double* sum_cu3);

    // d[i] = a[i]-b[i]; accumulates sum d[i] and sum d[i]^2
    void (*diff_stats)(const double* a, const double* b, std::size_t n,
                       double* sum_d, double* sum_d2);

    // over adjacent differences d[i] = x[i+1]-x[i], i in [0, n-1):
    // accumulates the sum of the negative d[i] and their count
    void (*neg_diff_stats)(const double* x, std::size_t n,
                           double* sum_neg, std::size_t* count_neg);

    // y[i] += x[i]
    void (*add)(double* y, const double* x, std::size_t n);

    // x[i] *= a
    void (*scale)(double* x, std::size_t n, double a);

    // pointwise complex product, interleaved (re,im) layout, n complex values:
    // out[k] = a[k] * b[k]; out may alias a
    void (*cmul)(const double* a, const double* b, double* out, std::size_t n);
};

// The backend selected for this process (CPU-feature detection, done once).
const Ops& active();

// Individual backends, for equivalence tests. Null when the build target or
// the running CPU does not support the instruction set.
const Ops& scalar_ops();
const Ops* avx2_ops();
const Ops* neon_ops();

// Test hook: force a backend by name ("scalar", "avx2", "neon", "auto").
// Returns false if the backend is unavailable on this machine.
bool force(std::string_view name);

} // namespace bvp::kernels
