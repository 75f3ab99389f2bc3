#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccm {

/// Rectangular raster of gray values 0..255, row-major (h-major).
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);

    std::uint8_t at(int w, int h) const { return pixels[std::size_t(h) * width + w]; }
    std::uint8_t& at(int w, int h) { return pixels[std::size_t(h) * width + w]; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Which lattice points belong to the digit.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> inside;

    BinaryMask() = default;
    BinaryMask(int w, int h, bool fill = false);

    bool contains(int w, int h) const noexcept { return w >= 0 && h >= 0 && w < width && h < height; }
    /// False for points off the lattice.
    bool test(int w, int h) const noexcept { return contains(w, h) && inside[std::size_t(h) * width + w] != 0; }
    void set(int w, int h, bool value = true) { inside[std::size_t(h) * width + w] = value ? 1 : 0; }
    std::size_t count() const noexcept;

    friend bool operator==(const BinaryMask&, const BinaryMask&) = default;
};

struct LabeledDigit {
    GrayImage image;
    int label = 0;
    std::size_t index = 0;
};

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;
inline constexpr int kDefaultGrayLimit = 80;

/// Parses an IDX3 image file (big-endian header). Throws Error{Format} on a wrong
/// magic and Error{Length} when the payload is shorter than the header announces.
std::vector<GrayImage> parse_idx_images(std::span<const std::uint8_t> bytes);
std::vector<int> parse_idx_labels(std::span<const std::uint8_t> bytes);

/// Inverse of parse_idx_images. All images must share one size.
std::vector<std::uint8_t> serialize_idx_images(std::span<const GrayImage> images);
std::vector<std::uint8_t> serialize_idx_labels(std::span<const int> labels);

/// Zips images and labels into LabeledDigit values; sizes must agree.
std::vector<LabeledDigit> zip_digits(std::vector<GrayImage> images, std::span<const int> labels);

enum class ThresholdRule {
    Greater,       // value > limit is inside
    GreaterEqual,  // value >= limit is inside
};

BinaryMask threshold(const GrayImage& image, int limit = kDefaultGrayLimit,
                     ThresholdRule rule = ThresholdRule::Greater);

/// Inside points become 255, outside points 0.
GrayImage to_gray(const BinaryMask& mask);

/// Pattern text: rectangular rows of '.' (outside) and '#' (inside).
BinaryMask load_pattern(std::string_view text);
std::string format_pattern(const BinaryMask& mask);

/// Every pixel replaced by a factor x factor block.
BinaryMask upscale(const BinaryMask& mask, int factor);
/// Shifts the mask content by (dw, dh); points pushed off the lattice are dropped.
BinaryMask translate(const BinaryMask& mask, int dw, int dh);

std::vector<std::uint8_t> read_file_bytes(const std::string& path);
std::string read_file_text(const std::string& path);

} // namespace ccm
