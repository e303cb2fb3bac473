#pragma once

#include <cstdint>
#include <filesystem>
#include <variant>

#include "fastfuse/plane.hpp"

namespace fastfuse {

using Image = std::variant<Plane, ColorImage>;

// Reads PNG (8-bit gray/RGB, palettes expanded), binary PGM/PPM with maxval
// 255, or baseline JPEG. Code c becomes sample c/255. Grayscale files give a
// Plane, color files a ColorImage. Throws IoError if the file cannot be read
// and FormatError for unsupported content.
Image load_image(const std::filesystem::path& path);

// Loads and requires a grayscale file; color files are converted to luma.
Plane load_gray(const std::filesystem::path& path);

// Format follows the extension: .png, .pgm (gray only) or .ppm (color only).
// Samples must already lie in [0,1] (ContractError otherwise); they are
// encoded as round-half-up(s * 255).
void save_image(const Plane& plane, const std::filesystem::path& path);
void save_image(const ColorImage& image, const std::filesystem::path& path);
void save_image(const Image& image, const std::filesystem::path& path);

[[noreturn]] void throw_sample_out_of_range(double s);

// round-half-up(s * 255); s must lie in [0,1]. The sum is non-negative, so
// truncation equals floor.
inline std::uint8_t encode_sample(double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw_sample_out_of_range(s);
  return static_cast<std::uint8_t>(static_cast<int>(s * 255.0 + 0.5));
}
inline double decode_sample(std::uint8_t code) { return code / 255.0; }

}  // namespace fastfuse
