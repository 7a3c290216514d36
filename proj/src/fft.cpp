#include "bvp/fft.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "bvp/kernels.hpp"

namespace bvp::fft {
namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Forward twiddles exp(-2*pi*i*j/n) for j < n/2, cached per size and thread.
const std::vector<std::complex<double>>& twiddles(std::size_t n) {
    thread_local std::map<std::size_t, std::vector<std::complex<double>>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> w(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j)
        w[j] = std::polar(1.0, -2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
    return cache.emplace(n, std::move(w)).first->second;
}

struct BluesteinPlan {
    std::size_t m = 0;                            // convolution size (power of two)
    std::vector<std::complex<double>> chirp;      // c[k] = exp(-i*pi*k^2/n)
    std::vector<std::complex<double>> kernel_fft; // FFT of the wrapped conjugate chirp
};

const BluesteinPlan& bluestein_plan(std::size_t n) {
    thread_local std::map<std::size_t, BluesteinPlan> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    BluesteinPlan plan;
    plan.m = next_pow2(2 * n - 1);
    plan.chirp.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        // k^2 mod 2n keeps the trig argument small for large k
        const std::size_t q = (k * k) % (2 * n);
        plan.chirp[k] =
            std::polar(1.0, -kPi * static_cast<double>(q) / static_cast<double>(n));
    }
    std::vector<std::complex<double>> b(plan.m, {0.0, 0.0});
    b[0] = std::conj(plan.chirp[0]);
    for (std::size_t k = 1; k < n; ++k) {
        b[k] = std::conj(plan.chirp[k]);
        b[plan.m - k] = b[k];
    }
    transform_pow2(b.data(), plan.m, false);
    plan.kernel_fft = std::move(b);
    return cache.emplace(n, std::move(plan)).first->second;
}

void cmul_inplace(std::complex<double>* a, const std::complex<double>* b, std::size_t n) {
    kernels::active().cmul(reinterpret_cast<const double*>(a),
                           reinterpret_cast<const double*>(b),
                           reinterpret_cast<double*>(a), n);
}

std::vector<std::complex<double>> bluestein(std::vector<std::complex<double>> x) {
    const std::size_t n = x.size();
    const BluesteinPlan& plan = bluestein_plan(n);

    std::vector<std::complex<double>> a(plan.m, {0.0, 0.0});
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * plan.chirp[k];

    transform_pow2(a.data(), plan.m, false);
    cmul_inplace(a.data(), plan.kernel_fft.data(), plan.m);
    transform_pow2(a.data(), plan.m, true);

    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * plan.chirp[k];
    return out;
}

} // namespace

void transform_pow2(std::complex<double>* a, std::size_t n, bool invert) {
    if (n <= 1) return;
    const auto& w = twiddles(n);

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::complex<double> tw = w[j * stride];
                if (invert) tw = std::conj(tw);
                const std::complex<double> u = a[i + j];
                const std::complex<double> v = a[i + j + len / 2] * tw;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }

    if (invert) {
        const double inv_n = 1.0 / static_cast<double>(n);
        kernels::active().scale(reinterpret_cast<double*>(a), 2 * n, inv_n);
    }
}

std::vector<std::complex<double>> transform(std::vector<std::complex<double>> x) {
    if (x.size() <= 1) return x;
    if (is_pow2(x.size())) {
        transform_pow2(x.data(), x.size(), false);
        return x;
    }
    return bluestein(std::move(x));
}

std::vector<std::complex<double>> inverse(std::vector<std::complex<double>> x) {
    const std::size_t n = x.size();
    if (n <= 1) return x;
    if (is_pow2(n)) {
        transform_pow2(x.data(), n, true);
        return x;
    }
    for (auto& v : x) v = std::conj(v);
    x = bluestein(std::move(x));
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& v : x) v = std::conj(v) * inv_n;
    return x;
}

} // namespace bvp::fft
