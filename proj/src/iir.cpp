#include "bvp/iir.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "bvp/errors.hpp"

namespace bvp {
namespace {

constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;

// both roots of z^2 + a1 z + a2 (a2 == 0 means a first-order section)
std::pair<cd, cd> section_poles(const Biquad& s) {
    if (s.a2 == 0.0) return {cd(-s.a1, 0.0), cd(0.0, 0.0)};
    const cd disc = std::sqrt(cd(s.a1 * s.a1 - 4.0 * s.a2, 0.0));
    return {(-s.a1 + disc) / 2.0, (-s.a1 - disc) / 2.0};
}

struct PoleGroup {
    std::vector<cd> poles; // 1 or 2 entries
    double closeness = 0.0;
};

// Pair poles into 2-pole (or trailing 1-pole) groups, most-resonant first.
std::vector<PoleGroup> group_poles(std::vector<cd> poles) {
    std::vector<PoleGroup> groups;
    std::vector<bool> used(poles.size(), false);
    const double tol = 1e-8;

    while (true) {
        int best = -1;
        for (std::size_t i = 0; i < poles.size(); ++i)
            if (!used[i] && (best < 0 || std::abs(poles[i]) > std::abs(poles[best])))
                best = static_cast<int>(i);
        if (best < 0) break;
        used[best] = true;
        PoleGroup g;
        g.poles.push_back(poles[best]);
        g.closeness = std::abs(poles[best]);

        if (std::fabs(poles[best].imag()) > tol) {
            // find the conjugate partner
            int mate = -1;
            double d_best = 0.0;
            for (std::size_t i = 0; i < poles.size(); ++i) {
                if (used[i]) continue;
                const double d = std::abs(poles[i] - std::conj(poles[best]));
                if (mate < 0 || d < d_best) {
                    mate = static_cast<int>(i);
                    d_best = d;
                }
            }
            if (mate < 0) throw InvalidBand("unpaired complex pole in design");
            used[mate] = true;
            g.poles.push_back(poles[mate]);
        } else {
            // pair with the nearest remaining real pole, if any
            int mate = -1;
            double d_best = 0.0;
            for (std::size_t i = 0; i < poles.size(); ++i) {
                if (used[i] || std::fabs(poles[i].imag()) > tol) continue;
                const double d = std::abs(poles[i] - poles[best]);
                if (mate < 0 || d < d_best) {
                    mate = static_cast<int>(i);
                    d_best = d;
                }
            }
            if (mate >= 0) {
                used[mate] = true;
                g.poles.push_back(poles[mate]);
            }
        }
        groups.push_back(std::move(g));
    }
    return groups;
}

Biquad make_section(const PoleGroup& g, std::vector<double>& zeros) {
    Biquad s;
    if (g.poles.size() == 2) {
        const cd sum = g.poles[0] + g.poles[1];
        const cd prod = g.poles[0] * g.poles[1];
        s.a1 = -sum.real();
        s.a2 = prod.real();
    } else {
        s.a1 = -g.poles[0].real();
        s.a2 = 0.0;
    }

    auto take_nearest = [&zeros](double target) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < zeros.size(); ++i)
            if (std::fabs(zeros[i] - target) < std::fabs(zeros[best] - target))
                best = i;
        const double z = zeros[best];
        zeros.erase(zeros.begin() + static_cast<std::ptrdiff_t>(best));
        return z;
    };

    if (g.poles.size() == 2) {
        const double z1 = take_nearest(g.poles[0].real());
        // balance the section when both +1 and -1 zeros remain
        const double z2 = take_nearest(-z1);
        s.b0 = 1.0;
        s.b1 = -(z1 + z2);
        s.b2 = z1 * z2;
    } else {
        const double z1 = take_nearest(g.poles[0].real());
        s.b0 = 1.0;
        s.b1 = -z1;
        s.b2 = 0.0;
    }
    return s;
}

} // namespace

const char* to_string(FilterKind kind) {
    return kind == FilterKind::bandpass ? "bandpass" : "highpass";
}

FilterKind filter_kind_from_string(const std::string& s) {
    if (s == "bandpass") return FilterKind::bandpass;
    if (s == "highpass") return FilterKind::highpass;
    throw InvalidConfig("unknown filter kind: " + s);
}

void FilterDesign::validate() const {
    if (sections.empty()) throw InvalidBand("design has no sections");
    for (const Biquad& s : sections) {
        const auto [p1, p2] = section_poles(s);
        if (std::abs(p1) >= 1.0 - 1e-9 || (s.a2 != 0.0 && std::abs(p2) >= 1.0 - 1e-9))
            throw InvalidBand("unstable section in design");
    }
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    auto check_cutoff = [this, inv_sqrt2](double f) {
        const double mag = std::abs(frequency_response(*this, f));
        if (std::fabs(mag - inv_sqrt2) > 0.01)
            throw InvalidBand("cutoff magnitude off the -3 dB point");
    };
    check_cutoff(f_low_hz);
    if (kind == FilterKind::bandpass) check_cutoff(f_high_hz);
}

FilterDesign design_butterworth(int order, FilterKind kind, double f_low_hz,
                                double f_high_hz, double fs_hz) {
    if (order < 1 || order > 8) throw UnsupportedOrder("order must lie in {1..8}");
    if (!(fs_hz > 0.0)) throw InvalidBand("sample rate must be positive");
    const double nyquist = fs_hz / 2.0;
    if (kind == FilterKind::bandpass) {
        if (!(0.0 < f_low_hz && f_low_hz < f_high_hz && f_high_hz < nyquist))
            throw InvalidBand("bandpass requires 0 < f_low < f_high < fs/2");
    } else {
        if (!(0.0 < f_low_hz && f_low_hz < nyquist))
            throw CutoffAboveNyquist("highpass requires 0 < cutoff < fs/2");
    }

    const int n = order;
    std::vector<cd> proto(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        proto[static_cast<std::size_t>(k - 1)] =
            std::polar(1.0, kPi * (2.0 * k + n - 1.0) / (2.0 * n));

    const double fs2 = 2.0 * fs_hz;
    const double w1 = fs2 * std::tan(kPi * f_low_hz / fs_hz);

    std::vector<cd> apoles;
    double again = 1.0;
    if (kind == FilterKind::bandpass) {
        const double w2 = fs2 * std::tan(kPi * f_high_hz / fs_hz);
        const double bw = w2 - w1;
        const double w0sq = w1 * w2;
        for (const cd& p : proto) {
            const cd pb = p * (bw / 2.0);
            const cd disc = std::sqrt(pb * pb - w0sq);
            apoles.push_back(pb + disc);
            apoles.push_back(pb - disc);
        }
        again = std::pow(bw, n); // n analog zeros at s = 0
    } else {
        cd neg_prod(1.0, 0.0);
        for (const cd& p : proto) {
            apoles.push_back(w1 / p);
            neg_prod *= -p;
        }
        again = 1.0 / neg_prod.real(); // n analog zeros at s = 0
    }

    // bilinear transform; analog zeros at s=0 all map to z=+1
    const std::size_t n_zeros_at_one = static_cast<std::size_t>(n);
    std::vector<cd> dpoles;
    cd gain_num(1.0, 0.0), gain_den(1.0, 0.0);
    for (const cd& p : apoles) {
        dpoles.push_back((fs2 + p) / (fs2 - p));
        gain_den *= fs2 - p;
    }
    for (std::size_t i = 0; i < n_zeros_at_one; ++i) gain_num *= fs2; // fs2 - 0
    double dgain = again * (gain_num / gain_den).real();

    std::vector<double> zeros(n_zeros_at_one, 1.0);
    // degree deficit becomes zeros at Nyquist
    while (zeros.size() < dpoles.size()) zeros.push_back(-1.0);

    std::vector<PoleGroup> groups = group_poles(std::move(dpoles));
    std::vector<Biquad> sections;
    for (const PoleGroup& g : groups) sections.push_back(make_section(g, zeros));
    // apply the least-resonant section first
    std::reverse(sections.begin(), sections.end());

    FilterDesign design{std::move(sections), order, kind, f_low_hz,
                        kind == FilterKind::bandpass ? f_high_hz : 0.0, fs_hz};

    // fold the overall gain into the first section
    Biquad& first = design.sections.front();
    first.b0 *= dgain;
    first.b1 *= dgain;
    first.b2 *= dgain;

    // exact unity normalization at the reference frequency
    double f_ref;
    if (kind == FilterKind::bandpass) {
        const double w0 = std::sqrt(w1 * fs2 * std::tan(kPi * f_high_hz / fs_hz));
        f_ref = fs_hz / kPi * std::atan(w0 / fs2);
    } else {
        f_ref = nyquist;
    }
    const double mag = std::abs(frequency_response(design, f_ref));
    if (mag > 0.0) {
        const double fix = 1.0 / mag;
        design.sections.front().b0 *= fix;
        design.sections.front().b1 *= fix;
        design.sections.front().b2 *= fix;
    }

    design.validate();
    return design;
}

Signal apply_filter(const FilterDesign& design, const Signal& signal, bool zero_phase) {
    signal.validate();
    if (std::fabs(design.fs_hz - signal.sample_rate_hz) >
        1e-9 * std::max(1.0, design.fs_hz))
        throw SampleRateMismatch("design and signal sample rates differ");
    if (signal.samples.size() < 3 * design.sections.size())
        throw SegmentTooShort("signal shorter than 3x section count");

    std::vector<double> y = signal.samples;
    auto run_forward = [&design](std::vector<double>& x) {
        for (const Biquad& s : design.sections) {
            double s1 = 0.0, s2 = 0.0;
            for (double& v : x) {
                const double in = v;
                const double out = s.b0 * in + s1;
                s1 = s.b1 * in - s.a1 * out + s2;
                s2 = s.b2 * in - s.a2 * out;
                v = out;
            }
        }
    };

    run_forward(y);
    if (zero_phase) {
        std::reverse(y.begin(), y.end());
        run_forward(y);
        std::reverse(y.begin(), y.end());
    }
    return Signal{std::move(y), signal.sample_rate_hz};
}

std::complex<double> frequency_response(const FilterDesign& design, double f_hz) {
    if (!(f_hz >= 0.0) || f_hz > design.fs_hz / 2.0)
        throw FrequencyOutOfRange("frequency outside [0, fs/2]");
    const cd zi = std::polar(1.0, -2.0 * kPi * f_hz / design.fs_hz);
    const cd zi2 = zi * zi;
    cd h(1.0, 0.0);
    for (const Biquad& s : design.sections)
        h *= (s.b0 + s.b1 * zi + s.b2 * zi2) / (1.0 + s.a1 * zi + s.a2 * zi2);
    return h;
}

std::string coefficients_csv(const FilterDesign& design) {
    std::ostringstream out;
    out << "section,b0,b1,b2,a1,a2\n";
    char buf[160];
    for (std::size_t i = 0; i < design.sections.size(); ++i) {
        const Biquad& s = design.sections[i];
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", i,
                      s.b0, s.b1, s.b2, s.a1, s.a2);
        out << buf;
    }
    return out.str();
}

} // namespace bvp
