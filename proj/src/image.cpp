#include "ccm/image.hpp"

#include "ccm/error.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

namespace ccm {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Format: return "format";
    case ErrorKind::Length: return "length";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Tracing: return "tracing";
    case ErrorKind::Search: return "search";
    case ErrorKind::Io: return "io";
    case ErrorKind::Usage: return "usage";
    }
    return "unknown";
}

std::string_view to_string(Stage stage) noexcept
{
    switch (stage) {
    case Stage::None: return "none";
    case Stage::Ingest: return "ingest";
    case Stage::Trace: return "trace";
    case Stage::Resample: return "resample";
    case Stage::Normalize: return "normalize";
    case Stage::Features: return "features";
    case Stage::Potential: return "potential";
    case Stage::Search: return "search";
    }
    return "unknown";
}

GrayImage::GrayImage(int w, int h, std::uint8_t fill)
    : width(w), height(h), pixels(std::size_t(w) * std::size_t(h), fill)
{}

BinaryMask::BinaryMask(int w, int h, bool fill)
    : width(w), height(h), inside(std::size_t(w) * std::size_t(h), fill ? 1 : 0)
{}

std::size_t BinaryMask::count() const noexcept
{
    return std::size_t(std::count(inside.begin(), inside.end(), std::uint8_t{1}));
}

namespace {

std::uint32_t read_be32(std::span<const std::uint8_t> bytes, std::size_t offset)
{
    if (bytes.size() < offset + 4)
        throw Error(ErrorKind::Length, "IDX header truncated");
    return (std::uint32_t(bytes[offset]) << 24) | (std::uint32_t(bytes[offset + 1]) << 16) |
           (std::uint32_t(bytes[offset + 2]) << 8) | std::uint32_t(bytes[offset + 3]);
}

void write_be32(std::vector<std::uint8_t>& out, std::uint32_t value)
{
    out.push_back(std::uint8_t(value >> 24));
    out.push_back(std::uint8_t(value >> 16));
    out.push_back(std::uint8_t(value >> 8));
    out.push_back(std::uint8_t(value));
}

void check_magic(std::uint32_t found, std::uint32_t expected)
{
    if (found != expected) {
        std::ostringstream msg;
        msg << "IDX magic 0x" << std::hex << found << " does not match expected 0x" << expected;
        throw Error(ErrorKind::Format, msg.str());
    }
}

} // namespace

std::vector<GrayImage> parse_idx_images(std::span<const std::uint8_t> bytes)
{
    check_magic(read_be32(bytes, 0), kIdxImageMagic);
    const std::size_t count = read_be32(bytes, 4);
    const std::size_t rows = read_be32(bytes, 8);
    const std::size_t cols = read_be32(bytes, 12);
    const std::size_t plane = rows * cols;
    if (bytes.size() - 16 < count * plane)
        throw Error(ErrorKind::Length, "IDX image payload truncated: need " + std::to_string(count * plane) +
                                           " bytes, have " + std::to_string(bytes.size() - 16));

    std::vector<GrayImage> images;
    images.reserve(count);
    auto it = bytes.begin() + 16;
    for (std::size_t n = 0; n < count; ++n) {
        GrayImage image{int(cols), int(rows)};
        std::copy_n(it, plane, image.pixels.begin());
        it += std::ptrdiff_t(plane);
        images.push_back(std::move(image));
    }
    return images;
}

std::vector<int> parse_idx_labels(std::span<const std::uint8_t> bytes)
{
    check_magic(read_be32(bytes, 0), kIdxLabelMagic);
    const std::size_t count = read_be32(bytes, 4);
    if (bytes.size() - 8 < count)
        throw Error(ErrorKind::Length, "IDX label payload truncated");

    std::vector<int> labels;
    labels.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        const int label = bytes[8 + n];
        if (label > 9)
            throw Error(ErrorKind::Format, "label " + std::to_string(label) + " at " + std::to_string(n) +
                                               " is outside 0..9");
        labels.push_back(label);
    }
    return labels;
}

std::vector<std::uint8_t> serialize_idx_images(std::span<const GrayImage> images)
{
    const int rows = images.empty() ? 28 : images.front().height;
    const int cols = images.empty() ? 28 : images.front().width;
    std::vector<std::uint8_t> out;
    out.reserve(16 + images.size() * std::size_t(rows) * std::size_t(cols));
    write_be32(out, kIdxImageMagic);
    write_be32(out, std::uint32_t(images.size()));
    write_be32(out, std::uint32_t(rows));
    write_be32(out, std::uint32_t(cols));
    for (const auto& image : images) {
        if (image.width != cols || image.height != rows)
            throw Error(ErrorKind::Format, "IDX images must share one size");
        out.insert(out.end(), image.pixels.begin(), image.pixels.end());
    }
    return out;
}

std::vector<std::uint8_t> serialize_idx_labels(std::span<const int> labels)
{
    std::vector<std::uint8_t> out;
    write_be32(out, kIdxLabelMagic);
    write_be32(out, std::uint32_t(labels.size()));
    for (int label : labels)
        out.push_back(std::uint8_t(label));
    return out;
}

std::vector<LabeledDigit> zip_digits(std::vector<GrayImage> images, std::span<const int> labels)
{
    if (images.size() != labels.size())
        throw Error(ErrorKind::Length, "image count " + std::to_string(images.size()) +
                                           " differs from label count " + std::to_string(labels.size()));
    std::vector<LabeledDigit> digits;
    digits.reserve(images.size());
    for (std::size_t n = 0; n < images.size(); ++n)
        digits.push_back({std::move(images[n]), labels[n], n});
    return digits;
}

BinaryMask threshold(const GrayImage& image, int limit, ThresholdRule rule)
{
    BinaryMask mask(image.width, image.height);
    for (std::size_t k = 0; k < image.pixels.size(); ++k) {
        const int value = image.pixels[k];
        const bool in = rule == ThresholdRule::Greater ? value > limit : value >= limit;
        mask.inside[k] = in ? 1 : 0;
    }
    return mask;
}

GrayImage to_gray(const BinaryMask& mask)
{
    GrayImage image(mask.width, mask.height);
    for (std::size_t k = 0; k < mask.inside.size(); ++k)
        image.pixels[k] = mask.inside[k] ? 255 : 0;
    return image;
}

BinaryMask load_pattern(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto end = text.find('\n');
        auto line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        if (end == std::string_view::npos)
            break;
        text.remove_prefix(end + 1);
    }
    while (!lines.empty() && lines.back().empty())
        lines.pop_back();
    if (lines.empty())
        throw Error(ErrorKind::Format, "pattern is empty");

    const std::size_t width = lines.front().size();
    if (width == 0)
        throw Error(ErrorKind::Format, "pattern has an empty first row");
    BinaryMask mask(int(width), int(lines.size()));
    for (std::size_t h = 0; h < lines.size(); ++h) {
        if (lines[h].size() != width)
            throw Error(ErrorKind::Length, "pattern row " + std::to_string(h + 1) + " has length " +
                                               std::to_string(lines[h].size()) + ", expected " +
                                               std::to_string(width));
        for (std::size_t w = 0; w < width; ++w) {
            const char c = lines[h][w];
            if (c == '#')
                mask.set(int(w), int(h));
            else if (c != '.')
                throw Error(ErrorKind::Format, std::string("pattern character '") + c + "' at row " +
                                                   std::to_string(h + 1) + " is not '.' or '#'");
        }
    }
    return mask;
}

std::string format_pattern(const BinaryMask& mask)
{
    std::string text;
    text.reserve(std::size_t(mask.width + 1) * std::size_t(mask.height));
    for (int h = 0; h < mask.height; ++h) {
        for (int w = 0; w < mask.width; ++w)
            text.push_back(mask.test(w, h) ? '#' : '.');
        text.push_back('\n');
    }
    return text;
}

BinaryMask upscale(const BinaryMask& mask, int factor)
{
    BinaryMask out(mask.width * factor, mask.height * factor);
    for (int h = 0; h < out.height; ++h)
        for (int w = 0; w < out.width; ++w)
            out.set(w, h, mask.test(w / factor, h / factor));
    return out;
}

BinaryMask translate(const BinaryMask& mask, int dw, int dh)
{
    BinaryMask out(mask.width, mask.height);
    for (int h = 0; h < mask.height; ++h)
        for (int w = 0; w < mask.width; ++w)
            if (mask.test(w, h) && out.contains(w + dw, h + dh))
                out.set(w + dw, h + dh);
    return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace ccm
