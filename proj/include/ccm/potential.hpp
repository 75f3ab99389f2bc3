#pragma once

#include "ccm/error.hpp"
#include "ccm/features.hpp"

#include <Eigen/Core>

#include <span>
#include <string>

namespace ccm {

/// V(i, j) for i over curve X (rows) and j over curve Y (columns), both cyclic.
template <typename Scalar>
using PotentialTorus = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct FeatureWeights {
    Eigen::Matrix<Scalar, kFeatureCount, 1> values;

    /// `angle` on the nine angle-derived features, `other` on the rest.
    static FeatureWeights uniform(Scalar angle = Scalar(3), Scalar other = Scalar(1))
    {
        FeatureWeights w;
        for (int k = 0; k < kFeatureCount; ++k)
            w.values(k) = is_angle_feature(k) ? angle : other;
        w.validate();
        return w;
    }

    static FeatureWeights from(std::span<const Scalar> values)
    {
        if (values.size() != std::size_t(kFeatureCount))
            throw Error(ErrorKind::Usage, "expected " + std::to_string(kFeatureCount) + " feature weights");
        FeatureWeights w;
        for (int k = 0; k < kFeatureCount; ++k)
            w.values(k) = values[std::size_t(k)];
        w.validate();
        return w;
    }

    void validate() const
    {
        if ((values.array() < Scalar(0)).any() || !values.allFinite())
            throw Error(ErrorKind::Usage, "feature weights must be finite and nonnegative");
        if ((values.array() == Scalar(0)).all())
            throw Error(ErrorKind::Usage, "feature weights must not all be zero");
    }
};

/// V(i, j) = sum_k weight_k * |fx(i, k) - fy(j, k)|, accumulated feature by feature
/// in index order.
template <typename Scalar>
PotentialTorus<Scalar> build_potential(const FeatureMatrix<Scalar>& fx, const FeatureMatrix<Scalar>& fy,
                                       const FeatureWeights<Scalar>& weights)
{
    const Eigen::Index rows = fx.rows();
    const Eigen::Index cols = fy.rows();
    PotentialTorus<Scalar> v = PotentialTorus<Scalar>::Zero(rows, cols);
    for (int k = 0; k < kFeatureCount; ++k) {
        const auto x = fx.values.col(k);
        const auto y = fy.values.col(k).transpose();
        v.array() += weights.values(k) * (x.replicate(1, cols) - y.replicate(rows, 1)).array().abs();
    }
    return v;
}

} // namespace ccm
