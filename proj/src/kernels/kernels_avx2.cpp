#include "bvp/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define BVP_HAVE_AVX2_BUILD 1
#include <immintrin.h>
#else
#define BVP_HAVE_AVX2_BUILD 0
#endif

#include <cmath>

namespace bvp::kernels {

#if BVP_HAVE_AVX2_BUILD
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double k_sum(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double k_sum_abs(const double* x, std::size_t n) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_andnot_pd(sign, _mm256_loadu_pd(x + i)));
    double s = hsum(acc);
    for (; i < n; ++i) s += std::fabs(x[i]);
    return s;
}

void k_min_max(const double* x, std::size_t n, double* mn, double* mx) {
    double lo = x[0], hi = x[0];
    std::size_t i = 0;
    if (n >= 4) {
        __m256d vlo = _mm256_loadu_pd(x);
        __m256d vhi = vlo;
        for (i = 4; i + 4 <= n; i += 4) {
            const __m256d v = _mm256_loadu_pd(x + i);
            vlo = _mm256_min_pd(vlo, v);
            vhi = _mm256_max_pd(vhi, v);
        }
        alignas(32) double tmp[4];
        _mm256_store_pd(tmp, vlo);
        lo = tmp[0];
        for (int k = 1; k < 4; ++k) lo = tmp[k] < lo ? tmp[k] : lo;
        _mm256_store_pd(tmp, vhi);
        hi = tmp[0];
        for (int k = 1; k < 4; ++k) hi = tmp[k] > hi ? tmp[k] : hi;
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
    const __m256d vm = _mm256_set1_pd(mean);
    __m256d acc2 = _mm256_setzero_pd();
    __m256d acc3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), vm);
        const __m256d d2 = _mm256_mul_pd(d, d);
        acc2 = _mm256_add_pd(acc2, d2);
        acc3 = _mm256_fmadd_pd(d2, d, acc3);
    }
    double m2 = hsum(acc2), m3 = hsum(acc3);
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
    __m256d acc = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_add_pd(acc, d);
        acc2 = _mm256_fmadd_pd(d, d, acc2);
    }
    double s = hsum(acc), s2 = hsum(acc2);
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
    __m256d acc = _mm256_setzero_pd();
    __m256d cnt = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    if (n >= 1) {
        for (; i + 5 <= n; i += 4) {
            const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i + 1),
                                            _mm256_loadu_pd(x + i));
            const __m256d neg = _mm256_cmp_pd(d, zero, _CMP_LT_OQ);
            acc = _mm256_add_pd(acc, _mm256_and_pd(d, neg));
            cnt = _mm256_add_pd(cnt, _mm256_and_pd(one, neg));
        }
    }
    double s = hsum(acc);
    double c = hsum(cnt);
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
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) y[i] += x[i];
}

void k_scale(double* x, std::size_t n, double a) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), va));
    for (; i < n; ++i) x[i] *= a;
}

void k_cmul(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const __m256d va = _mm256_loadu_pd(a + 2 * k);
        const __m256d vb = _mm256_loadu_pd(b + 2 * k);
        const __m256d b_re = _mm256_movedup_pd(vb);
        const __m256d b_im = _mm256_permute_pd(vb, 0xF);
        const __m256d a_sw = _mm256_permute_pd(va, 0x5);
        _mm256_storeu_pd(out + 2 * k,
                         _mm256_fmaddsub_pd(va, b_re, _mm256_mul_pd(a_sw, b_im)));
    }
    for (; k < n; ++k) {
        const double ar = a[2 * k], ai = a[2 * k + 1];
        const double br = b[2 * k], bi = b[2 * k + 1];
        out[2 * k] = ar * br - ai * bi;
        out[2 * k + 1] = ar * bi + ai * br;
    }
}

constexpr Ops kAvx2Ops = {
    "avx2",       k_sum, k_sum_abs,       k_min_max, k_central_moments,
    k_diff_stats, k_neg_diff_stats, k_add, k_scale,  k_cmul,
};

} // namespace

const Ops* avx2_ops() {
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return &kAvx2Ops;
    return nullptr;
}

#else

const Ops* avx2_ops() { return nullptr; }

#endif // BVP_HAVE_AVX2_BUILD

} // namespace bvp::kernels
