#include "ccm/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

namespace ccm {

namespace {

ClassifyRow score_digit(const LabeledDigit& digit, std::span<const FeatureMatrix<double>> patterns,
                        const ClassifyOptions& options)
{
    ClassifyRow row;
    row.index = digit.index;
    row.label = digit.label;
    try {
        const auto mask = threshold(digit.image, options.gray_limit, options.rule);
        const auto features = curve_features(mask, options.pipeline);
        for (std::size_t p = 0; p < patterns.size(); ++p)
            row.scores[p] = match_features(features, patterns[p], options.pipeline).mean_potential;
        const auto best = std::min_element(row.scores.begin(), row.scores.end());
        row.best = int(best - row.scores.begin());
        row.rejected = *best > options.threshold;
    } catch (const Error& e) {
        row.scores.fill(std::nan(""));
        row.best = -1;
        row.rejected = true;
        row.error = std::string(to_string(e.stage())) + ": " + e.what();
    }
    return row;
}

} // namespace

ClassifyReport classify(std::span<const LabeledDigit> digits, std::span<const BinaryMask> patterns,
                        const ClassifyOptions& options)
{
    if (patterns.size() != std::size_t(kPatternCount))
        throw Error(ErrorKind::Usage, "classify needs exactly 10 patterns");
    options.pipeline.search.validate();

    std::vector<FeatureMatrix<double>> pattern_features;
    for (const auto& p : patterns)
        pattern_features.push_back(curve_features(p, options.pipeline));

    ClassifyReport report;
    report.threshold = options.threshold;
    report.rows.resize(digits.size());

    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, unsigned(digits.size())));
    if (workers <= 1) {
        for (std::size_t k = 0; k < digits.size(); ++k)
            report.rows[k] = score_digit(digits[k], pattern_features, options);
        return report;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < digits.size(); k = next++)
                report.rows[k] = score_digit(digits[k], pattern_features, options);
        });
    pool.clear();
    return report;
}

std::string report_csv(const ClassifyReport& report)
{
    std::ostringstream out;
    out << "index,label";
    for (int p = 0; p < kPatternCount; ++p)
        out << ",s" << p;
    out << ",best,rejected\n";
    char buf[32];
    for (const auto& row : report.rows) {
        out << row.index << ',' << row.label;
        for (double s : row.scores) {
            std::snprintf(buf, sizeof buf, "%.6f", s);
            out << ',' << buf;
        }
        out << ',' << row.best << ',' << (row.rejected ? 1 : 0) << '\n';
    }
    return out.str();
}

std::vector<BinaryMask> load_pattern_set(const std::string& dir)
{
    std::vector<BinaryMask> patterns;
    for (int p = 0; p < kPatternCount; ++p)
        patterns.push_back(load_pattern(read_file_text(dir + "/" + std::to_string(p) + ".pattern")));
    return patterns;
}

} // namespace ccm
