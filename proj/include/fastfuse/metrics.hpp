#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fastfuse/plane.hpp"

namespace fastfuse {

// Shannon entropy (bits) of the 256-level histogram. Samples in [0,1].
double entropy(const Plane& p);

// Mutual information (bits) from the 256x256 joint histogram, computed as
// H(a) + H(f) - H(a, f).
double mutual_information(const Plane& a, const Plane& f);

// Normalized mutual information (Hossny et al.):
// 2 * [MI(a,f) / (H(a) + H(f)) + MI(b,f) / (H(b) + H(f))].
// A term whose denominator is zero counts as 0.
double q_mi(const Plane& a, const Plane& b, const Plane& f);

// Gradient-based fusion metric of Xydeas and Petrovic with Sobel gradients
// (edge-replicated borders) and their sigmoid constants. Orientation
// differences are folded into [0, pi/2] so that opposite gradient directions
// count as the same edge. When neither source has any gradient the metric is
// undefined and reported as 0.
struct GradientMetricConstants {
  double gamma_g = 0.9994;
  double kappa_g = -15.0;
  double sigma_g = 0.5;
  double gamma_a = 0.9879;
  double kappa_a = -22.0;
  double sigma_a = 0.8;
};
double q_g(const Plane& a, const Plane& b, const Plane& f, const GradientMetricConstants& c = {});

// Yang et al. structural-similarity fusion metric on every 8x8 window
// (stride 1). SSIM uses C1 = (0.01)^2, C2 = (0.03)^2 for unit-range samples.
// Window scores below zero are clamped to zero.
inline constexpr int kQyWindow = 8;
inline constexpr double kQyThreshold = 0.75;
double q_y(const Plane& a, const Plane& b, const Plane& f);

// SSIM of one window pair, exposed for testing (population statistics).
double window_ssim(const Plane& a, const Plane& b, int x0, int y0, int size);

struct MetricsReport {
  double en = 0.0;
  double mi = 0.0;  // sum_k MI(I_k, F)
  double q_mi = 0.0;
  double q_g = 0.0;
  double q_y = 0.0;
  std::vector<double> mi_per_source;
  std::vector<double> source_entropy;
  int source_count = 0;
  // Pairwise metrics (q_mi, q_g, q_y) only see the first two sources when
  // source_count > 2.
  bool pairwise_first_two = false;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

MetricsReport evaluate(const SourceSet& sources, const Plane& fused);

nlohmann::ordered_json to_json(const MetricsReport& r);
MetricsReport metrics_from_json(const nlohmann::json& j);

// Stable column order: en,mi,q_mi,q_g,q_y
std::string metrics_csv_header();
std::string metrics_csv_row(const MetricsReport& r);

}  // namespace fastfuse
