#pragma once

#include "ccm/path_search.hpp"
#include "ccm/potential.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ccm {

using Rgb = std::array<std::uint8_t, 3>;

struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb; // row-major, 3 bytes per pixel

    Rgb at(int x, int y) const
    {
        const std::size_t k = 3 * (std::size_t(y) * std::size_t(width) + std::size_t(x));
        return {rgb[k], rgb[k + 1], rgb[k + 2]};
    }
};

struct HeatmapSpec {
    int cell = 4;
    Rgb low = {0, 100, 0};      // dark green
    Rgb high = {190, 190, 190}; // gray
    // Path cells are recoloured on their own ramp, stretched over the path's values.
    Rgb path_low = {255, 255, 0};
    Rgb path_high = {220, 0, 0};
};

/// Linear ramp between two colours, t in [0, 1].
Rgb ramp(const Rgb& from, const Rgb& to, double t);

/// Cell (i, j) is drawn at column i, row j. Colours are stretched over the torus
/// minimum and maximum.
RgbImage render_heatmap(const PotentialTorus<double>& v, const TorusPath* path, const HeatmapSpec& spec = {});

/// Binary PPM: "P6\n{w} {h}\n255\n" followed by the RGB bytes.
std::vector<std::uint8_t> encode_ppm(const RgbImage& image);
RgbImage decode_ppm(std::span<const std::uint8_t> bytes);

/// Same picture as render_heatmap, one <rect> per cell.
std::string render_svg(const PotentialTorus<double>& v, const TorusPath* path, const HeatmapSpec& spec = {});

} // namespace ccm
