#pragma once

#include "ccm/image.hpp"
#include "ccm/similarity.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace ccm {

inline constexpr int kPatternCount = 10;
inline constexpr double kDefaultRejectThreshold = 13.0;

struct ClassifyRow {
    std::size_t index = 0;
    int label = 0;
    std::array<double, kPatternCount> scores{};
    int best = -1;
    /// Best score above the threshold, or the digit could not be scored.
    bool rejected = false;
    /// Empty unless a pipeline stage failed for this digit.
    std::string error;
};

struct ClassifyReport {
    std::vector<ClassifyRow> rows;
    double threshold = kDefaultRejectThreshold;
};

struct ClassifyOptions {
    PipelineConfig<double> pipeline;
    double threshold = kDefaultRejectThreshold;
    int gray_limit = kDefaultGrayLimit;
    ThresholdRule rule = ThresholdRule::Greater;
    /// Worker threads; rows come back in digit order regardless.
    unsigned threads = 1;
};

/// Scores every digit against the patterns ('0'..'9' in order). Patterns must trace;
/// digits that fail are reported in their row.
ClassifyReport classify(std::span<const LabeledDigit> digits, std::span<const BinaryMask> patterns,
                        const ClassifyOptions& options = {});

/// Header: index,label,s0..s9,best,rejected. Failed rows carry nan scores and best -1.
std::string report_csv(const ClassifyReport& report);

/// Loads <dir>/0.pattern .. <dir>/9.pattern.
std::vector<BinaryMask> load_pattern_set(const std::string& dir);

} // namespace ccm
