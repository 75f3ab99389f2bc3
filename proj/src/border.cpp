#include "ccm/border.hpp"

#include "ccm/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ccm {

namespace {

LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.w + b.w, a.h + b.h}; }

int direction_of(LatticePoint from, LatticePoint to)
{
    const LatticePoint d{to.w - from.w, to.h - from.h};
    for (int k = 0; k < 8; ++k)
        if (kClockwise[std::size_t(k)] == d)
            return k;
    return -1;
}

std::string describe(LatticePoint p) { return "(" + std::to_string(p.w) + "," + std::to_string(p.h) + ")"; }

LatticePoint successor(const BinaryMask& mask, LatticePoint prev, LatticePoint cur)
{
    const int back = direction_of(cur, prev);
    for (int k = 1; k <= 8; ++k) {
        const LatticePoint cand = cur + kClockwise[std::size_t((back + k) % 8)];
        if (is_border(mask, cand))
            return cand;
    }
    throw Error(ErrorKind::Degenerate, "no border successor around " + describe(cur));
}

} // namespace

bool is_border(const BinaryMask& mask, LatticePoint p) noexcept
{
    if (!mask.test(p.w, p.h))
        return false;
    for (auto d : kClockwise)
        if (!mask.test(p.w + d.w, p.h + d.h))
            return true;
    return false;
}

std::vector<LatticePoint> border_points(const BinaryMask& mask)
{
    std::vector<LatticePoint> out;
    for (int h = 0; h < mask.height; ++h)
        for (int w = 0; w < mask.width; ++w)
            if (is_border(mask, {w, h}))
                out.push_back({w, h});
    return out;
}

std::pair<LatticePoint, LatticePoint> start_pair(const BinaryMask& mask, LatticePoint p)
{
    if (!is_border(mask, p))
        throw Error(ErrorKind::Degenerate, describe(p) + " is not a border point");
    int outside = 0;
    while (mask.test(p.w + kClockwise[std::size_t(outside)].w, p.h + kClockwise[std::size_t(outside)].h))
        ++outside;
    for (int k = 1; k < 8; ++k) {
        const LatticePoint cand = p + kClockwise[std::size_t((outside + k) % 8)];
        if (is_border(mask, cand))
            return {p, cand};
    }
    throw Error(ErrorKind::Degenerate, "isolated point " + describe(p) + " has no border neighbour");
}

ClosedCurve trace_from(const BinaryMask& mask, LatticePoint p, LatticePoint q)
{
    if (!is_border(mask, p) || !is_border(mask, q))
        throw Error(ErrorKind::Degenerate, "start pair " + describe(p) + "," + describe(q) + " is not on the border");
    if (direction_of(p, q) < 0)
        throw Error(ErrorKind::Degenerate, "start pair " + describe(p) + "," + describe(q) + " is not adjacent");

    // Each directed border pair can occur once before the first one repeats.
    const std::size_t budget = 8 * border_points(mask).size() + 1;

    ClosedCurve curve;
    curve.points.push_back(p);
    LatticePoint a = p;
    LatticePoint b = q;
    for (std::size_t step = 0;; ++step) {
        if (step >= budget)
            throw Error(ErrorKind::Tracing, "borderline from " + describe(p) + " did not close within " +
                                                std::to_string(budget) + " steps");
        const LatticePoint c = successor(mask, a, b);
        a = b;
        b = c;
        if (a == p && b == q)
            break;
        curve.points.push_back(a);
    }
    curve.orientation = orientation_of(curve.points);
    return curve;
}

std::int64_t twice_signed_area(const std::vector<LatticePoint>& points) noexcept
{
    std::int64_t sum = 0;
    const std::size_t n = points.size();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& a = points[k];
        const auto& b = points[(k + 1) % n];
        sum += std::int64_t(a.w) * b.h - std::int64_t(b.w) * a.h;
    }
    return sum;
}

Orientation orientation_of(const std::vector<LatticePoint>& points) noexcept
{
    return twice_signed_area(points) >= 0 ? Orientation::Right : Orientation::Left;
}

std::vector<ClosedCurve> trace_all_borderlines(const BinaryMask& mask)
{
    std::vector<ClosedCurve> curves;
    std::vector<std::uint8_t> covered(mask.inside.size(), 0);
    for (const auto& p : border_points(mask)) {
        if (covered[std::size_t(p.h) * std::size_t(mask.width) + std::size_t(p.w)])
            continue;
        std::pair<LatticePoint, LatticePoint> start;
        try {
            start = start_pair(mask, p);
        } catch (const Error&) {
            continue; // isolated pixel, not a borderline
        }
        auto curve = trace_from(mask, start.first, start.second);
        for (const auto& q : curve.points)
            covered[std::size_t(q.h) * std::size_t(mask.width) + std::size_t(q.w)] = 1;
        curves.push_back(std::move(curve));
    }
    return curves;
}

ClosedCurve outer_borderline(const BinaryMask& mask)
{
    if (mask.count() == 0)
        throw Error(ErrorKind::Degenerate, "mask has no inside points", Stage::Trace);

    auto curves = trace_all_borderlines(mask);
    const ClosedCurve* best = nullptr;
    std::int64_t best_area = -1;
    for (const auto& curve : curves) {
        if (curve.orientation != Orientation::Right)
            continue;
        const auto area = twice_signed_area(curve.points);
        if (area > best_area) {
            best = &curve;
            best_area = area;
        }
    }
    if (!best)
        throw Error(ErrorKind::Degenerate, "no right-oriented borderline (isolated pixels only?)", Stage::Trace);
    return *best;
}

} // namespace ccm
