#pragma once

#include "fastfuse/plane.hpp"

namespace fastfuse {

// ITU-R BT.601 luma weights, full range: y in [0,1], cb/cr in [-0.5,0.5].
inline constexpr double kLumaRed = 0.299;
inline constexpr double kLumaBlue = 0.114;
inline constexpr double kLumaGreen = 1.0 - kLumaRed - kLumaBlue;

struct YCbCr {
  Plane y;
  Plane cb;
  Plane cr;
};

YCbCr rgb_to_ycbcr(const ColorImage& img);

// Exact algebraic inverse of rgb_to_ycbcr; output is not clipped.
ColorImage ycbcr_to_rgb(const YCbCr& ycc);

}  // namespace fastfuse
