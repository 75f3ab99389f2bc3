#pragma once

#include "ccm/border.hpp"
#include "ccm/error.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <vector>

namespace ccm {

inline constexpr int kSampleCount = 60;

/// One (w, h) point per row.
template <typename Scalar>
using PointMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, 2>;

/// Points at equal arc-length spacing along a closed polygon.
template <typename Scalar>
struct ResampledCurve {
    PointMatrix<Scalar> points;

    Eigen::Index size() const noexcept { return points.rows(); }
};

/// H spans [0, 1]; W is centred on the mean width; both scaled by the height span d.
template <typename Scalar>
struct NormalizedCurve {
    PointMatrix<Scalar> points;
    Scalar d = 0;

    Eigen::Index size() const noexcept { return points.rows(); }
};

/// Samples `count` points at arc lengths k * L / count along the closed polygon
/// (closing edge included), starting at the first curve point.
///
/// Coordinates are taken relative to the curve's bounding-box corner so that an
/// integer translation of the curve yields bit-identical output.
template <typename Scalar = double>
ResampledCurve<Scalar> resample(const std::vector<LatticePoint>& curve, int count = kSampleCount)
{
    if (count < 1)
        throw Error(ErrorKind::Usage, "resample count must be positive", Stage::Resample);
    if (curve.size() < 2)
        throw Error(ErrorKind::Degenerate, "curve needs at least 2 points to resample", Stage::Resample);

    int min_w = curve.front().w;
    int min_h = curve.front().h;
    for (const auto& p : curve) {
        min_w = std::min(min_w, p.w);
        min_h = std::min(min_h, p.h);
    }

    const std::size_t n = curve.size();
    PointMatrix<Scalar> vertices(Eigen::Index(n), 2);
    for (std::size_t k = 0; k < n; ++k)
        vertices.row(Eigen::Index(k)) << Scalar(curve[k].w - min_w), Scalar(curve[k].h - min_h);

    // cumulative[e] is the arc length at vertex e; cumulative[n] is the perimeter.
    std::vector<Scalar> cumulative(n + 1, Scalar(0));
    for (std::size_t e = 0; e < n; ++e) {
        const auto a = vertices.row(Eigen::Index(e));
        const auto b = vertices.row(Eigen::Index((e + 1) % n));
        cumulative[e + 1] = cumulative[e] + (b - a).norm();
    }
    const Scalar perimeter = cumulative[n];
    if (!(perimeter > Scalar(0)))
        throw Error(ErrorKind::Degenerate, "curve has zero perimeter", Stage::Resample);

    ResampledCurve<Scalar> out;
    out.points.resize(count, 2);
    std::size_t e = 0;
    for (int k = 0; k < count; ++k) {
        const Scalar s = Scalar(k) * perimeter / Scalar(count);
        while (e + 1 < n && s >= cumulative[e + 1])
            ++e;
        const Scalar length = cumulative[e + 1] - cumulative[e];
        const auto a = vertices.row(Eigen::Index(e));
        const auto b = vertices.row(Eigen::Index((e + 1) % n));
        if (length > Scalar(0))
            out.points.row(k) = a + ((s - cumulative[e]) / length) * (b - a);
        else
            out.points.row(k) = a;
    }
    return out;
}

template <typename Scalar>
NormalizedCurve<Scalar> normalize_coords(const ResampledCurve<Scalar>& curve)
{
    const auto w = curve.points.col(0);
    const auto h = curve.points.col(1);
    const Scalar min_h = h.minCoeff();
    const Scalar d = h.maxCoeff() - min_h;
    if (!(d > Scalar(0)))
        throw Error(ErrorKind::Degenerate, "curve has zero height span", Stage::Normalize);

    Scalar sum_w = 0;
    for (Eigen::Index k = 0; k < w.size(); ++k)
        sum_w += w(k);
    const Scalar mean_w = sum_w / Scalar(w.size());

    NormalizedCurve<Scalar> out;
    out.d = d;
    out.points.resize(curve.points.rows(), 2);
    out.points.col(0) = (w.array() - mean_w) / d;
    out.points.col(1) = (h.array() - min_h) / d;
    return out;
}

/// Relabels a cyclic curve so that row k becomes row (k - shift) mod n.
template <typename Derived>
auto cyclic_shift_rows(const Eigen::MatrixBase<Derived>& m, Eigen::Index shift)
{
    using Plain = typename Derived::PlainObject;
    const Eigen::Index n = m.rows();
    Plain out(n, m.cols());
    for (Eigen::Index k = 0; k < n; ++k)
        out.row(k) = m.row(((k + shift) % n + n) % n);
    return out;
}

} // namespace ccm
