#include "ccm/render.hpp"

#include "ccm/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace ccm {

namespace {

double unit(double value, double lo, double hi)
{
    return hi > lo ? (value - lo) / (hi - lo) : 0.0;
}

// Colour of every cell, path overlay applied.
std::vector<Rgb> cell_colours(const PotentialTorus<double>& v, const TorusPath* path, const HeatmapSpec& spec)
{
    const Eigen::Index rows = v.rows();
    const Eigen::Index cols = v.cols();
    std::vector<Rgb> colours(std::size_t(rows * cols));
    const double lo = rows > 0 && cols > 0 ? v.minCoeff() : 0.0;
    const double hi = rows > 0 && cols > 0 ? v.maxCoeff() : 0.0;
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            colours[std::size_t(i * cols + j)] = ramp(spec.low, spec.high, unit(v(i, j), lo, hi));

    if (path && !path->cells.empty()) {
        double plo = v(path->cells.front().i, path->cells.front().j);
        double phi = plo;
        for (const Cell& c : path->cells) {
            plo = std::min(plo, v(c.i, c.j));
            phi = std::max(phi, v(c.i, c.j));
        }
        for (const Cell& c : path->cells)
            colours[std::size_t(c.i * cols + c.j)] = ramp(spec.path_low, spec.path_high, unit(v(c.i, c.j), plo, phi));
    }
    return colours;
}

} // namespace

Rgb ramp(const Rgb& from, const Rgb& to, double t)
{
    t = std::clamp(t, 0.0, 1.0);
    Rgb out;
    for (std::size_t c = 0; c < 3; ++c)
        out[c] = std::uint8_t(std::lround(double(from[c]) + t * (double(to[c]) - double(from[c]))));
    return out;
}

RgbImage render_heatmap(const PotentialTorus<double>& v, const TorusPath* path, const HeatmapSpec& spec)
{
    const auto colours = cell_colours(v, path, spec);
    const int rows = int(v.rows());
    const int cols = int(v.cols());
    RgbImage image;
    image.width = rows * spec.cell;
    image.height = cols * spec.cell;
    image.rgb.resize(3 * std::size_t(image.width) * std::size_t(image.height));
    for (int y = 0; y < image.height; ++y) {
        for (int x = 0; x < image.width; ++x) {
            const Rgb& c = colours[std::size_t((x / spec.cell) * cols + y / spec.cell)];
            const std::size_t k = 3 * (std::size_t(y) * std::size_t(image.width) + std::size_t(x));
            std::copy(c.begin(), c.end(), image.rgb.begin() + std::ptrdiff_t(k));
        }
    }
    return image;
}

std::vector<std::uint8_t> encode_ppm(const RgbImage& image)
{
    const std::string header =
        "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), image.rgb.begin(), image.rgb.end());
    return out;
}

RgbImage decode_ppm(std::span<const std::uint8_t> bytes)
{
    std::size_t pos = 0;
    const auto token = [&]() {
        while (pos < bytes.size() && std::isspace(bytes[pos]))
            ++pos;
        std::string t;
        while (pos < bytes.size() && !std::isspace(bytes[pos]))
            t.push_back(char(bytes[pos++]));
        return t;
    };
    if (token() != "P6")
        throw Error(ErrorKind::Format, "not a binary PPM (P6)");
    RgbImage image;
    try {
        image.width = std::stoi(token());
        image.height = std::stoi(token());
        if (std::stoi(token()) != 255)
            throw Error(ErrorKind::Format, "PPM maxval must be 255");
    } catch (const std::logic_error&) {
        throw Error(ErrorKind::Format, "malformed PPM header");
    }
    ++pos; // single whitespace before the raster
    const std::size_t need = 3 * std::size_t(image.width) * std::size_t(image.height);
    if (bytes.size() < pos || bytes.size() - pos != need)
        throw Error(ErrorKind::Length, "PPM raster has wrong length");
    image.rgb.assign(bytes.begin() + std::ptrdiff_t(pos), bytes.end());
    return image;
}

std::string render_svg(const PotentialTorus<double>& v, const TorusPath* path, const HeatmapSpec& spec)
{
    const auto colours = cell_colours(v, path, spec);
    const Eigen::Index rows = v.rows();
    const Eigen::Index cols = v.cols();
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << rows * spec.cell << "\" height=\""
        << cols * spec.cell << "\" shape-rendering=\"crispEdges\">\n";
    char fill[8];
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            const Rgb& c = colours[std::size_t(i * cols + j)];
            std::snprintf(fill, sizeof fill, "#%02x%02x%02x", c[0], c[1], c[2]);
            out << "<rect x=\"" << i * spec.cell << "\" y=\"" << j * spec.cell << "\" width=\"" << spec.cell
                << "\" height=\"" << spec.cell << "\" fill=\"" << fill << "\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace ccm
