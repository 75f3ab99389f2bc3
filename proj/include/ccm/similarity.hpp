#pragma once

#include "ccm/border.hpp"
#include "ccm/features.hpp"
#include "ccm/image.hpp"
#include "ccm/normalize.hpp"
#include "ccm/path_search.hpp"
#include "ccm/potential.hpp"

#include <utility>

namespace ccm {

template <typename Scalar = double>
struct PipelineConfig {
    int samples = kSampleCount;
    FeatureOptions features;
    FeatureWeights<Scalar> weights = FeatureWeights<Scalar>::uniform();
    SearchConfig search;
};

namespace detail {

// Runs `fn`, stamping `stage` on any ccm::Error that does not carry one yet.
template <typename Fn>
decltype(auto) in_stage(Stage stage, Fn&& fn)
{
    try {
        return std::forward<Fn>(fn)();
    } catch (const Error& e) {
        if (e.stage() != Stage::None)
            throw;
        throw e.with_stage(stage);
    }
}

} // namespace detail

/// Everything computed for one curve on the way to its features.
template <typename Scalar>
struct CurveAnalysis {
    ClosedCurve border;
    NormalizedCurve<Scalar> normalized;
    FeatureMatrix<Scalar> features;
};

template <typename Scalar = double>
CurveAnalysis<Scalar> analyze(const BinaryMask& mask, const PipelineConfig<Scalar>& config = {})
{
    CurveAnalysis<Scalar> out;
    out.border = detail::in_stage(Stage::Trace, [&] { return outer_borderline(mask); });
    auto resampled = detail::in_stage(Stage::Resample, [&] { return resample<Scalar>(out.border.points, config.samples); });
    out.normalized = detail::in_stage(Stage::Normalize, [&] { return normalize_coords(resampled); });
    out.features = detail::in_stage(Stage::Features, [&] { return feature_matrix(out.normalized, config.features); });
    return out;
}

template <typename Scalar = double>
FeatureMatrix<Scalar> curve_features(const BinaryMask& mask, const PipelineConfig<Scalar>& config = {})
{
    return analyze(mask, config).features;
}

template <typename Scalar>
MatchResult<Scalar> match_features(const FeatureMatrix<Scalar>& fx, const FeatureMatrix<Scalar>& fy,
                                   const PipelineConfig<Scalar>& config)
{
    const auto v = detail::in_stage(Stage::Potential, [&] { return build_potential(fx, fy, config.weights); });
    return detail::in_stage(Stage::Search, [&] { return canonical_path(v, config.search); });
}

/// Mean potential along the canonical path of the outer borderlines of two masks.
/// Lower is more similar; identical shapes score 0 under deterministic ties.
template <typename Scalar = double>
MatchResult<Scalar> similarity(const BinaryMask& x, const BinaryMask& y, const PipelineConfig<Scalar>& config = {})
{
    return match_features(curve_features(x, config), curve_features(y, config), config);
}

} // namespace ccm
