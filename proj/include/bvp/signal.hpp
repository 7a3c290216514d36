#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace bvp {

// Uniformly sampled waveform; the common currency of every module.
// Samples are immutable by convention once constructed.
struct Signal {
    std::vector<double> samples;
    double sample_rate_hz = 0.0;

    std::size_t size() const { return samples.size(); }
    double duration_s() const {
        return static_cast<double>(samples.size()) / sample_rate_hz;
    }

    // Throws InvalidConfig when empty, non-positive rate or non-finite samples.
    void validate() const;
};

// One-sided DFT bins k = 0..floor(N/2), scaled by 1/N.
struct Spectrum {
    std::vector<std::complex<double>> bins;
    double bin_width_hz = 0.0;
    double scaling = 0.0; // normalization constant applied to the raw DFT (1/N)
};

// Per-beat waveform template: a systolic Gaussian peak plus a smaller
// dicrotic Gaussian at a fixed offset, tiled at the beat period.
struct SynthesisConfig {
    double heart_rate_bpm = 70.0;
    double sample_rate_hz = 64.0;
    double duration_s = 300.0;

    double systolic_amplitude = 1.0;
    double systolic_width_s = 0.055;
    double dicrotic_amplitude = 0.35;
    double dicrotic_width_s = 0.09;
    double dicrotic_offset_s = 0.28; // delay of the dicrotic bump after the systolic peak

    // fraction of the beat period; 0 disables, capped at 0.01
    double jitter_frac = 0.0;

    void validate() const; // throws InvalidConfig
};

// Deterministic for a given (config, seed); the seed only drives the
// optional inter-beat jitter. Output is normalized to zero mean and unit
// peak magnitude.
Signal synthesize_bvp(const SynthesisConfig& config, std::uint64_t seed);

// Signal CSV: first line "# fs=<float>", then one amplitude per line,
// written with 9 significant digits.
Signal load_signal(const std::string& path);
void save_signal(const Signal& signal, const std::string& path);

// Same container format, 0/1 rows. Used for noise masks.
std::vector<bool> load_mask(const std::string& path, double* fs_out = nullptr);
void save_mask(const std::vector<bool>& mask, double fs, const std::string& path);

} // namespace bvp
