#pragma once

#include "ccm/error.hpp"
#include "ccm/normalize.hpp"

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <numbers>

namespace ccm {

inline constexpr int kWindowCount = 3;
inline constexpr int kBaseCount = 5;
inline constexpr int kOrderCount = 3;
inline constexpr int kFeatureCount = kWindowCount * kBaseCount * kOrderCount;
inline constexpr std::array<int, kWindowCount> kDefaultWindows = {3, 7, 13};

/// The five base coordinates, in feature-index order.
enum class Base { W = 0, H = 1, Sum = 2, Diff = 3, Angle = 4 };

/// Column of a feature in a FeatureMatrix: window-major, then base, then order.
constexpr int feature_index(int window_slot, Base base, int order) noexcept
{
    return (window_slot * kBaseCount + int(base)) * kOrderCount + order;
}

constexpr bool is_angle_feature(int index) noexcept
{
    return (index / kOrderCount) % kBaseCount == int(Base::Angle);
}

template <typename Scalar>
struct SmoothedCurve {
    int window = 1;
    PointMatrix<Scalar> points;
};

template <typename Scalar>
using FeatureValues = Eigen::Matrix<Scalar, Eigen::Dynamic, kFeatureCount, Eigen::RowMajor>;

template <typename Scalar>
struct FeatureMatrix {
    FeatureValues<Scalar> values;

    Eigen::Index rows() const noexcept { return values.rows(); }

    static constexpr std::array<bool, kFeatureCount> angle_mask()
    {
        std::array<bool, kFeatureCount> mask{};
        for (int k = 0; k < kFeatureCount; ++k)
            mask[std::size_t(k)] = is_angle_feature(k);
        return mask;
    }
};

enum class AngleUnit { Degrees, Radians };

struct FeatureOptions {
    std::array<int, kWindowCount> windows = kDefaultWindows;
    /// Store |difference| at orders 1 and 2; false keeps the signed differences.
    bool absolute_differences = true;
    /// Unit of the angle columns. angle_at always reports degrees; radians keep the
    /// angle columns on the same scale as the normalized coordinates.
    AngleUnit angle_unit = AngleUnit::Radians;
};

/// Cyclic centred moving average of W and H over `window` points.
template <typename Derived>
SmoothedCurve<typename Derived::Scalar> smooth(const Eigen::MatrixBase<Derived>& points, int window)
{
    using Scalar = typename Derived::Scalar;
    const Eigen::Index n = points.rows();
    if (window < 1 || window % 2 == 0 || window >= n)
        throw Error(ErrorKind::Usage, "smoothing window must be odd, positive and below the point count",
                    Stage::Features);

    const int radius = (window - 1) / 2;
    SmoothedCurve<Scalar> out;
    out.window = window;
    out.points.resize(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Matrix<Scalar, 1, 2> sum = Eigen::Matrix<Scalar, 1, 2>::Zero();
        for (int o = -radius; o <= radius; ++o)
            sum += points.row(((i + o) % n + n) % n);
        out.points.row(i) = sum / Scalar(window);
    }
    return out;
}

template <typename Scalar>
SmoothedCurve<Scalar> smooth(const NormalizedCurve<Scalar>& curve, int window)
{
    return smooth(curve.points, window);
}

/// Direction of (successor - predecessor) in degrees, image coordinates, in [0, 360).
/// Coinciding neighbours, the (P,Q,P) turn, give 180.
template <typename Scalar>
Scalar angle_at(const SmoothedCurve<Scalar>& curve, Eigen::Index i)
{
    const Eigen::Index n = curve.points.rows();
    const auto pred = curve.points.row(((i - 1) % n + n) % n);
    const auto succ = curve.points.row((i + 1) % n);
    const Scalar dw = succ(0) - pred(0);
    const Scalar dh = succ(1) - pred(1);
    if (std::hypot(dw, dh) < Scalar(1e-12))
        return Scalar(180);
    Scalar deg = std::atan2(dh, dw) * Scalar(180) / std::numbers::pi_v<Scalar>;
    if (deg < Scalar(0))
        deg += Scalar(360);
    if (deg >= Scalar(360))
        deg -= Scalar(360);
    return deg;
}

/// Representative of an angle difference in (-180, 180].
template <typename Scalar>
Scalar wrap_degrees(Scalar delta)
{
    delta = std::fmod(delta, Scalar(360));
    if (delta > Scalar(180))
        delta -= Scalar(360);
    else if (delta <= Scalar(-180))
        delta += Scalar(360);
    return delta;
}

/// 45 local features per point. Order 0 is the base coordinate itself; order 1 the
/// difference successor - predecessor; order 2 the same difference taken over the
/// signed order-1 values. Angle differences are wrapped to (-180, 180] first.
template <typename Scalar>
FeatureMatrix<Scalar> feature_matrix(const NormalizedCurve<Scalar>& curve, const FeatureOptions& options = {})
{
    const Eigen::Index n = curve.points.rows();
    const auto prev = [n](Eigen::Index i) { return (i + n - 1) % n; };
    const auto next = [n](Eigen::Index i) { return (i + 1) % n; };
    const Scalar angle_scale =
        options.angle_unit == AngleUnit::Degrees ? Scalar(1) : std::numbers::pi_v<Scalar> / Scalar(180);
    const auto finish = [&](Scalar v) { return options.absolute_differences ? std::abs(v) : v; };

    FeatureMatrix<Scalar> out;
    out.values.resize(n, kFeatureCount);

    Eigen::Matrix<Scalar, Eigen::Dynamic, kBaseCount> base(n, kBaseCount);
    Eigen::Matrix<Scalar, Eigen::Dynamic, kBaseCount> first(n, kBaseCount);
    for (int slot = 0; slot < kWindowCount; ++slot) {
        const auto smoothed = smooth(curve, options.windows[std::size_t(slot)]);
        base.col(0) = smoothed.points.col(0);
        base.col(1) = smoothed.points.col(1);
        base.col(2) = smoothed.points.col(0) + smoothed.points.col(1);
        base.col(3) = smoothed.points.col(0) - smoothed.points.col(1);
        for (Eigen::Index i = 0; i < n; ++i)
            base(i, 4) = angle_at(smoothed, i);

        for (Eigen::Index i = 0; i < n; ++i) {
            for (int b = 0; b < kBaseCount; ++b) {
                Scalar delta = base(next(i), b) - base(prev(i), b);
                if (b == int(Base::Angle))
                    delta = wrap_degrees(delta);
                first(i, b) = delta;
            }
        }

        for (Eigen::Index i = 0; i < n; ++i) {
            for (int b = 0; b < kBaseCount; ++b) {
                const Scalar scale = b == int(Base::Angle) ? angle_scale : Scalar(1);
                const Scalar second = first(next(i), b) - first(prev(i), b);
                out.values(i, feature_index(slot, Base(b), 0)) = base(i, b) * scale;
                out.values(i, feature_index(slot, Base(b), 1)) = finish(first(i, b)) * scale;
                out.values(i, feature_index(slot, Base(b), 2)) = finish(second) * scale;
            }
        }
    }
    return out;
}

} // namespace ccm
