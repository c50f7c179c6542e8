#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "myo/common.hpp"

namespace myo::signal {

// One multichannel sample. t_us is microseconds since session start and must
// be strictly increasing across a stream; nominal spacing is 500 us (2 kHz).
struct EmgFrame {
    int64_t t_us = 0;
    std::vector<double> samples;
};

// A causal window of N samples x C channels ending at end_t_us. Storage is
// time-major (sample-contiguous) so the TD5 kernel can vectorize across
// channels; at(c, k) presents the logical C x N view.
struct EmgWindow {
    int64_t end_t_us = 0;
    size_t channels = 0;
    size_t length = 0;
    std::vector<double> data; // length * channels, time-major

    double at(size_t channel, size_t k) const { return data[k * channels + channel]; }
};

// 5*C feature values ordered (MAV, WL, VAR, SSC, ZC) per channel:
// values[f*C + c] is feature f of channel c.
struct FeatureVector {
    int64_t t_us = 0;
    std::vector<double> values;

    bool operator==(const FeatureVector&) const = default;
};

// Ordered length-L history at the 25 ms stride, oldest first.
struct FeatureSequence {
    std::vector<FeatureVector> steps;
};

// The five Hudgins time-domain features per channel. Thresholds default to
// zero; raise them for noise robustness.
FeatureVector extract_td5(const EmgWindow& window, double eps_zc = 0.0, double eps_ssc = 0.0);

struct ExtractorConfig {
    size_t channels = kDefaultChannels;
    int window_ms = 50;      // 50 or 200 in the standard model set
    int stride_ms = 25;
    double eps_zc = 0.0;
    double eps_ssc = 0.0;
    int64_t sample_us = kSampleUs;
};

// Fixed-rate streaming TD5 extractor. Emits one FeatureVector per stride
// once the first full window is buffered; every output depends only on
// samples at or before its timestamp. Gaps of one missing sample are filled
// by previous-sample hold; larger gaps raise GapExceedsTolerance.
class StreamingExtractor {
public:
    explicit StreamingExtractor(const ExtractorConfig& cfg);

    // Feeds one frame; returns a feature vector when a stride completes.
    std::optional<FeatureVector> push(const EmgFrame& frame);

    size_t window_samples() const { return window_n_; }
    size_t stride_samples() const { return stride_n_; }

private:
    std::optional<FeatureVector> accept_sample(int64_t t_us, const double* samples);

    ExtractorConfig cfg_;
    size_t window_n_;
    size_t stride_n_;
    std::vector<double> ring_;      // window_n_ x channels, time-major ring
    std::vector<double> scratch_;   // linearized window for the kernel
    std::vector<double> held_;      // last sample, for gap fill
    size_t head_ = 0;               // next ring slot
    size_t filled_ = 0;
    size_t since_emit_ = 0;
    int64_t last_t_us_ = -1;
    bool have_last_ = false;
};

// Offline reference path: extracts the same feature stream from a full
// recording by materializing each window directly. Streaming/batch
// equivalence is asserted bit-exactly in tests.
std::vector<FeatureVector> extract_offline(std::span<const EmgFrame> frames,
                                           const ExtractorConfig& cfg);

// Returns the L most recent vectors in time order (oldest first).
FeatureSequence make_sequence(std::span<const FeatureVector> history, size_t seq_len);

// Per-dimension z-scoring, fit on training data only and frozen afterwards.
class Standardizer {
public:
    Standardizer() = default;

    void fit(std::span<const FeatureVector> train);
    FeatureVector apply(const FeatureVector& v) const;
    void apply_inplace(std::span<double> values) const;

    bool fitted() const { return fitted_; }
    size_t dim() const { return mean_.size(); }
    const std::vector<double>& mean() const { return mean_; }
    const std::vector<double>& stddev() const { return std_; }

    // Used by checkpoint restore.
    static Standardizer from_moments(std::vector<double> mean, std::vector<double> stddev);

private:
    std::vector<double> mean_;
    std::vector<double> std_;
    bool fitted_ = false;
};

} // namespace myo::signal
