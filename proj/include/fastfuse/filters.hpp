#pragma once

#include "fastfuse/plane.hpp"

namespace fastfuse {

// Base layer plus signed detail layer; base + detail reproduces the source.
struct DecompositionPair {
  Plane base;
  Plane detail;
};

struct GuidedFilterParams {
  int radius = 1;          // window is (2r+1) x (2r+1)
  double epsilon = 1e-2;   // regularizer on the [0,1]^2 intensity scale
};

// Mean over the (2r+1)^2 window clipped to the image, divided by the number
// of in-bounds samples. O(N) via running column sums and row prefix sums,
// independent of r. Radii beyond the image size give the global mean.
Plane box_filter(const Plane& p, int radius);

// base = box_filter(p, radius), detail = p - base.
DecompositionPair decompose(const Plane& p, int radius);

// Gray-guide guided filter (He, Sun & Tang): q = mean(a) * I + mean(b) with
// a = cov(I,p) / (var(I) + eps) and b = mean(p) - a * mean(I), all means
// taken with box_filter.
Plane guided_filter(const Plane& p, const Plane& guide, const GuidedFilterParams& params);

}  // namespace fastfuse
