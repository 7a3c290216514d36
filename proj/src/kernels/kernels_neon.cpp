#include "bvp/kernels.hpp"

#if defined(__aarch64__)
#define BVP_HAVE_NEON_BUILD 1
#include <arm_neon.h>
#else
#define BVP_HAVE_NEON_BUILD 0
#endif

#include <cmath>

namespace bvp::kernels {

#if BVP_HAVE_NEON_BUILD
namespace {

double k_sum(const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(x + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double k_sum_abs(const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vabsq_f64(vld1q_f64(x + i)));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += std::fabs(x[i]);
    return s;
}

void k_min_max(const double* x, std::size_t n, double* mn, double* mx) {
    double lo = x[0], hi = x[0];
    std::size_t i = 0;
    if (n >= 2) {
        float64x2_t vlo = vld1q_f64(x);
        float64x2_t vhi = vlo;
        for (i = 2; i + 2 <= n; i += 2) {
            const float64x2_t v = vld1q_f64(x + i);
            vlo = vminq_f64(vlo, v);
            vhi = vmaxq_f64(vhi, v);
        }
        lo = vminvq_f64(vlo);
        hi = vmaxvq_f64(vhi);
    }
    for (; i < n; ++i) {
        if (x[i] < lo) lo = x[i];
        if (x[i] > hi) hi = x[i];
    }
    *mn = lo;
    *mx = hi;
}

void k_central_moments(const double* x, std::size_t n, double mean,
                       double* sum_sq2, double* sum_cu3) {
    const float64x2_t vm = vdupq_n_f64(mean);
    float64x2_t acc2 = vdupq_n_f64(0.0);
    float64x2_t acc3 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t d = vsubq_f64(vld1q_f64(x + i), vm);
        const float64x2_t d2 = vmulq_f64(d, d);
        acc2 = vaddq_f64(acc2, d2);
        acc3 = vfmaq_f64(acc3, d2, d);
    }
    double m2 = vaddvq_f64(acc2), m3 = vaddvq_f64(acc3);
    for (; i < n; ++i) {
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
    float64x2_t acc = vdupq_n_f64(0.0);
    float64x2_t acc2 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t d = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
        acc = vaddq_f64(acc, d);
        acc2 = vfmaq_f64(acc2, d, d);
    }
    double s = vaddvq_f64(acc), s2 = vaddvq_f64(acc2);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d;
        s2 += d * d;
    }
    *sum_d = s;
    *sum_d2 = s2;
}

void k_neg_diff_stats(const double* x, std::size_t n,
                      double* sum_neg, std::size_t* count_neg) {
    float64x2_t acc = vdupq_n_f64(0.0);
    float64x2_t cnt = vdupq_n_f64(0.0);
    const float64x2_t one = vdupq_n_f64(1.0);
    const float64x2_t zero = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 3 <= n; i += 2) {
        const float64x2_t d = vsubq_f64(vld1q_f64(x + i + 1), vld1q_f64(x + i));
        const uint64x2_t neg = vcltq_f64(d, zero);
        acc = vaddq_f64(acc, vreinterpretq_f64_u64(vandq_u64(
                                 vreinterpretq_u64_f64(d), neg)));
        cnt = vaddq_f64(cnt, vreinterpretq_f64_u64(vandq_u64(
                                 vreinterpretq_u64_f64(one), neg)));
    }
    double s = vaddvq_f64(acc);
    double c = vaddvq_f64(cnt);
    for (; i + 1 < n; ++i) {
        const double d = x[i + 1] - x[i];
        if (d < 0.0) {
            s += d;
            c += 1.0;
        }
    }
    *sum_neg = s;
    *count_neg = static_cast<std::size_t>(c);
}

void k_add(double* y, const double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += x[i];
}

void k_scale(double* x, std::size_t n, double a) {
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(x + i, vmulq_f64(vld1q_f64(x + i), va));
    for (; i < n; ++i) x[i] *= a;
}

void k_cmul(const double* a, const double* b, double* out, std::size_t n) {
    const float64x2_t sign = {-1.0, 1.0};
    for (std::size_t k = 0; k < n; ++k) {
        const float64x2_t va = vld1q_f64(a + 2 * k); // [ar, ai]
        const float64x2_t vb = vld1q_f64(b + 2 * k); // [br, bi]
        const float64x2_t b_re = vdupq_laneq_f64(vb, 0);
        const float64x2_t b_im = vdupq_laneq_f64(vb, 1);
        const float64x2_t a_sw = vextq_f64(va, va, 1); // [ai, ar]
        // [-ai*bi, ar*bi] + [ar*br, ai*br]
        const float64x2_t t = vmulq_f64(vmulq_f64(a_sw, b_im), sign);
        vst1q_f64(out + 2 * k, vfmaq_f64(t, va, b_re));
    }
}

constexpr Ops kNeonOps = {
    "neon",       k_sum, k_sum_abs,       k_min_max, k_central_moments,
    k_diff_stats, k_neg_diff_stats, k_add, k_scale,  k_cmul,
};

} // namespace

const Ops* neon_ops() { return &kNeonOps; }

#else

const Ops* neon_ops() { return nullptr; }

#endif // BVP_HAVE_NEON_BUILD

} // namespace bvp::kernels
