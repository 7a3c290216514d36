#include "bvp/kernels.hpp"

#include <cmath>

namespace bvp::kernels {
namespace {

double k_sum(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double k_sum_abs(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(x[i]);
    return s;
}

void k_min_max(const double* x, std::size_t n, double* mn, double* mx) {
    double lo = x[0], hi = x[0];
    for (std::size_t i = 1; i < n; ++i) {
        if (x[i] < lo) lo = x[i];
        if (x[i] > hi) hi = x[i];
    }
    *mn = lo;
    *mx = hi;
}

void k_central_moments(const double* x, std::size_t n, double mean,
                       double* sum_sq2, double* sum_cu3) {
    double m2 = 0.0, m3 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
    }
    *sum_sq2 = m2;
    *sum_cu3 = m3;
}

void k_diff_stats(const double* a, const double* b, std::size_t n,
                  double* sum_d, double* sum_d2) {
    double s = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d;
        s2 += d * d;
    }
    *sum_d = s;
    *sum_d2 = s2;
}

void k_neg_diff_stats(const double* x, std::size_t n,
                      double* sum_neg, std::size_t* count_neg) {
    double s = 0.0;
    std::size_t c = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = x[i + 1] - x[i];
        if (d < 0.0) {
            s += d;
            ++c;
        }
    }
    *sum_neg = s;
    *count_neg = c;
}

void k_add(double* y, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
}

void k_scale(double* x, std::size_t n, double a) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void k_cmul(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        const double ar = a[2 * k], ai = a[2 * k + 1];
        const double br = b[2 * k], bi = b[2 * k + 1];
        out[2 * k] = ar * br - ai * bi;
        out[2 * k + 1] = ar * bi + ai * br;
    }
}

constexpr Ops kScalarOps = {
    "scalar",     k_sum, k_sum_abs,       k_min_max, k_central_moments,
    k_diff_stats, k_neg_diff_stats, k_add, k_scale,  k_cmul,
};

} // namespace

const Ops& scalar_ops() { return kScalarOps; }

} // namespace bvp::kernels
