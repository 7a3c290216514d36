#pragma once

#include <stdexcept>
#include <string>

namespace bvp {

// Base class for all toolkit errors. CLI maps these to exit code 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define BVP_DEFINE_ERROR(Name)                                    \
    struct Name final : Error {                                   \
        explicit Name(const std::string& msg) : Error(msg) {}     \
    }

// signal
BVP_DEFINE_ERROR(InvalidConfig);
BVP_DEFINE_ERROR(ParseError);
BVP_DEFINE_ERROR(MissingHeader);
BVP_DEFINE_ERROR(EmptySignal);
BVP_DEFINE_ERROR(IoError);

// noise
BVP_DEFINE_ERROR(IncrementOutOfRange);
BVP_DEFINE_ERROR(ConfigExceedsSignal);
BVP_DEFINE_ERROR(CutoffAboveNyquist);
BVP_DEFINE_ERROR(LengthMismatch);

// filters
BVP_DEFINE_ERROR(InvalidBand);
BVP_DEFINE_ERROR(UnsupportedOrder);
BVP_DEFINE_ERROR(SampleRateMismatch);
BVP_DEFINE_ERROR(SegmentTooShort);
BVP_DEFINE_ERROR(FrequencyOutOfRange);

// features
BVP_DEFINE_ERROR(SignalTooShort);
BVP_DEFINE_ERROR(KeyMismatch);

// segmenter
BVP_DEFINE_ERROR(TooShort);
BVP_DEFINE_ERROR(ZeroVariance);
BVP_DEFINE_ERROR(NoValidSegments);

// stats
BVP_DEFINE_ERROR(TooFewPairs);
BVP_DEFINE_ERROR(InvalidAlpha);
BVP_DEFINE_ERROR(TargetOutOfRange);

#undef BVP_DEFINE_ERROR

} // namespace bvp
