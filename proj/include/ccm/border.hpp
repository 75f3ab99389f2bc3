#pragma once

#include "ccm/image.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace ccm {

struct LatticePoint {
    int w = 0;
    int h = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint& a, const LatticePoint& b)
    {
        // row-major
        if (auto c = a.h <=> b.h; c != 0)
            return c;
        return a.w <=> b.w;
    }
};

/// Right: clockwise on screen (w rightward, h downward), the digit interior on the
/// right-hand side of the walk. This is the outer borderline; holes come out Left.
enum class Orientation { Right, Left };

struct ClosedCurve {
    std::vector<LatticePoint> points;
    Orientation orientation = Orientation::Right;

    std::size_t size() const noexcept { return points.size(); }
};

/// The eight neighbour offsets in clockwise screen order, starting west.
inline constexpr std::array<LatticePoint, 8> kClockwise = {{
    {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1},
}};

/// An inside point with at least one of its 8 neighbours outside or off the lattice.
bool is_border(const BinaryMask& mask, LatticePoint p) noexcept;

/// All border points in row-major order.
std::vector<LatticePoint> border_points(const BinaryMask& mask);

/// Start pair for a border point: from the first outside neighbour (clockwise from west)
/// rotate on to the first border neighbour. Throws Error{Degenerate} for isolated points.
std::pair<LatticePoint, LatticePoint> start_pair(const BinaryMask& mask, LatticePoint p);

/// Follows the border from the directed pair (p, q): the successor of q is the first
/// border point met when rotating clockwise around q, starting just after p. Stops when
/// (p, q) comes round again.
ClosedCurve trace_from(const BinaryMask& mask, LatticePoint p, LatticePoint q);

/// Twice the shoelace area in image coordinates; positive for Right curves.
std::int64_t twice_signed_area(const std::vector<LatticePoint>& points) noexcept;

/// Zero area (including 2-point curves) counts as Right.
Orientation orientation_of(const std::vector<LatticePoint>& points) noexcept;

/// Every borderline reachable from a not-yet-covered border point, in row-major
/// order of their start points.
std::vector<ClosedCurve> trace_all_borderlines(const BinaryMask& mask);

/// The right-oriented borderline enclosing the largest area.
ClosedCurve outer_borderline(const BinaryMask& mask);

} // namespace ccm
