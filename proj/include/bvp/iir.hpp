#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bvp/signal.hpp"

namespace bvp {

enum class FilterKind { bandpass, highpass };

const char* to_string(FilterKind kind);
FilterKind filter_kind_from_string(const std::string& s);

// One second-order section; denominator is (1, a1, a2).
struct Biquad {
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

struct FilterDesign {
    std::vector<Biquad> sections;
    int order = 0;
    FilterKind kind = FilterKind::bandpass;
    double f_low_hz = 0.0;  // the cutoff for highpass designs
    double f_high_hz = 0.0; // unused for highpass designs
    double fs_hz = 0.0;

    // Checks section-pole stability (|pole| < 1 - 1e-9) and the -3 dB
    // magnitude at each cutoff (1/sqrt(2) within 0.01).
    void validate() const;
};

// Order in {1..8}. Analog Butterworth prototype, band transform, bilinear
// transform with frequency pre-warping, then pole/zero pairing into
// second-order sections (poles sorted by proximity to the unit circle).
FilterDesign design_butterworth(int order, FilterKind kind, double f_low_hz,
                                double f_high_hz, double fs_hz);

// Cascaded direct-form-II-transposed evaluation, single forward pass with
// zero initial state. zero_phase runs a forward and a time-reversed pass.
Signal apply_filter(const FilterDesign& design, const Signal& signal,
                    bool zero_phase = false);

// Exact transfer-function value at frequency f on the unit circle.
std::complex<double> frequency_response(const FilterDesign& design, double f_hz);

// Coefficient table "section,b0,b1,b2,a1,a2" for cross-implementation checks.
std::string coefficients_csv(const FilterDesign& design);

} // namespace bvp
