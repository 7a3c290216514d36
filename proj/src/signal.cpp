#include "bvp/signal.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bvp/errors.hpp"
#include "bvp/kernels.hpp"
#include "bvp/rng.hpp"

namespace bvp {

void Signal::validate() const {
    if (samples.empty()) throw InvalidConfig("signal has no samples");
    if (!(sample_rate_hz > 0.0)) throw InvalidConfig("sample rate must be positive");
    for (double v : samples)
        if (!std::isfinite(v)) throw InvalidConfig("signal contains non-finite samples");
}

void SynthesisConfig::validate() const {
    if (!(heart_rate_bpm >= 30.0 && heart_rate_bpm <= 220.0))
        throw InvalidConfig("heart_rate_bpm must lie in [30, 220]");
    if (!(sample_rate_hz > 0.0)) throw InvalidConfig("sample_rate_hz must be positive");
    if (!(duration_s > 0.0)) throw InvalidConfig("duration_s must be positive");
    const double count = duration_s * sample_rate_hz;
    if (std::fabs(count - std::round(count)) > 1e-6 || std::round(count) < 2.0)
        throw InvalidConfig("duration_s * sample_rate_hz must be an integer >= 2");
    if (!(systolic_amplitude > 0.0 && systolic_width_s > 0.0 &&
          dicrotic_amplitude > 0.0 && dicrotic_width_s > 0.0 &&
          dicrotic_offset_s > 0.0))
        throw InvalidConfig("template parameters must be positive");
    const double period = 60.0 / heart_rate_bpm;
    if (dicrotic_offset_s >= period)
        throw InvalidConfig("dicrotic_offset_s must be shorter than the beat period");
    if (!(jitter_frac >= 0.0 && jitter_frac <= 0.01))
        throw InvalidConfig("jitter_frac must lie in [0, 0.01]");
}

namespace {

inline double gauss_bump(double t, double center, double width) {
    const double u = (t - center) / width;
    return std::exp(-0.5 * u * u);
}

} // namespace

Signal synthesize_bvp(const SynthesisConfig& config, std::uint64_t seed) {
    config.validate();

    const double fs = config.sample_rate_hz;
    const double period = 60.0 / config.heart_rate_bpm;
    const std::size_t n = static_cast<std::size_t>(std::llround(config.duration_s * fs));
    const std::size_t n_beats =
        static_cast<std::size_t>(std::ceil(config.duration_s / period));

    // Beat onsets, two extra beats on each side so every sample sees full
    // neighbor support and zero-jitter output is exactly periodic.
    std::vector<double> onsets;
    onsets.reserve(n_beats + 5);
    RngStream jitter_rng = RngStream(seed).derive(1);
    for (long k = -2; k <= static_cast<long>(n_beats) + 2; ++k) {
        double t = static_cast<double>(k) * period;
        if (config.jitter_frac > 0.0)
            t += config.jitter_frac * period * (2.0 * jitter_rng.uniform01() - 1.0);
        onsets.push_back(t);
    }

    // Systolic peak sits at a fixed phase inside the beat.
    const double systolic_phase = 0.3 * period;

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / fs;
        const long k0 = static_cast<long>(std::floor(t / period));
        double v = 0.0;
        for (long k = k0 - 2; k <= k0 + 2; ++k) {
            const long idx = k + 2;
            if (idx < 0 || idx >= static_cast<long>(onsets.size())) continue;
            const double c = onsets[static_cast<std::size_t>(idx)] + systolic_phase;
            v += config.systolic_amplitude * gauss_bump(t, c, config.systolic_width_s);
            v += config.dicrotic_amplitude *
                 gauss_bump(t, c + config.dicrotic_offset_s, config.dicrotic_width_s);
        }
        x[i] = v;
    }

    // zero mean, unit peak magnitude
    const double mean = kernels::active().sum(x.data(), x.size()) / static_cast<double>(n);
    for (double& v : x) v -= mean;
    double lo = 0.0, hi = 0.0;
    kernels::active().min_max(x.data(), x.size(), &lo, &hi);
    const double peak = std::max(std::fabs(lo), std::fabs(hi));
    if (peak > 0.0) kernels::active().scale(x.data(), x.size(), 1.0 / peak);

    return Signal{std::move(x), fs};
}

namespace {

std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

} // namespace

Signal load_signal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw EmptySignal("empty file: " + path);
    if (line.rfind("# fs=", 0) != 0)
        throw MissingHeader("missing '# fs=' header in " + path);
    double fs = 0.0;
    try {
        std::size_t used = 0;
        fs = std::stod(line.substr(5), &used);
    } catch (const std::exception&) {
        throw MissingHeader("unparsable sample rate in " + path);
    }
    if (!(fs > 0.0)) throw MissingHeader("non-positive sample rate in " + path);

    std::vector<double> samples;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(line, &used);
        } catch (const std::exception&) {
            throw ParseError("bad sample at " + path + ":" + std::to_string(line_no));
        }
        while (used < line.size() &&
               (line[used] == ' ' || line[used] == '\t' || line[used] == '\r'))
            ++used;
        if (used != line.size())
            throw ParseError("trailing junk at " + path + ":" + std::to_string(line_no));
        if (!std::isfinite(v))
            throw ParseError("non-finite sample at " + path + ":" + std::to_string(line_no));
        samples.push_back(v);
    }
    if (samples.empty()) throw EmptySignal("no samples in " + path);
    return Signal{std::move(samples), fs};
}

void save_signal(const Signal& signal, const std::string& path) {
    signal.validate();
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "# fs=" << format_g9(signal.sample_rate_hz) << "\n";
    for (double v : signal.samples) out << format_g9(v) << "\n";
    if (!out) throw IoError("write failure on " + path);
}

std::vector<bool> load_mask(const std::string& path, double* fs_out) {
    const Signal s = load_signal(path);
    if (fs_out) *fs_out = s.sample_rate_hz;
    std::vector<bool> mask(s.samples.size());
    for (std::size_t i = 0; i < s.samples.size(); ++i) mask[i] = s.samples[i] != 0.0;
    return mask;
}

void save_mask(const std::vector<bool>& mask, double fs, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "# fs=" << format_g9(fs) << "\n";
    for (bool b : mask) out << (b ? "1\n" : "0\n");
    if (!out) throw IoError("write failure on " + path);
}

} // namespace bvp
