#pragma once

#include <array>
#include <cstdint>

namespace myo {

// Session-wide constants. Channel count and rates are configurable at the
// RunConfig level; these are the defaults the whole stack is sized for.
inline constexpr int kNumDofs = 7;
inline constexpr int kDefaultChannels = 16;
inline constexpr int kSampleRateHz = 2000;
inline constexpr int64_t kSampleUs = 500;    // 2000 Hz
inline constexpr int64_t kStepUs = 25000;    // 25 ms prediction time-step
inline constexpr int kFeaturesPerChannel = 5;

// Normalized per-DoF positions, each in [0,1].
// Index semantics: 0 wrist flex/ext, 1 wrist add/abd, 2 thumb,
// 3..6 index..little fingers.
struct DofVector {
    std::array<double, kNumDofs> phi{};

    double& operator[](int i) { return phi[static_cast<size_t>(i)]; }
    double operator[](int i) const { return phi[static_cast<size_t>(i)]; }
    bool operator==(const DofVector&) const = default;
};

} // namespace myo
