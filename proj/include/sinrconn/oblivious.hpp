#pragma once

#include "sinrconn/geometry.hpp"
#include "sinrconn/power_function.hpp"
#include "sinrconn/scheduler.hpp"
#include "sinrconn/sinr.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace sinrconn {

// g(x) = 1/2 min(p(x), x^alpha / p(x)).
double smooth_g(const PowerFunction& p, double x, double alpha);
double log_smooth_g(const PowerFunction& p, double x, double alpha);

struct SmoothnessReport {
  bool at_least_identity = true;  // p(x) >= x
  bool monotone = true;           // p non-decreasing
  bool sublinear = true;          // p(x) <= x^alpha
  bool g_increasing = true;
  bool g_unbounded = true;

  [[nodiscard]] bool smooth() const {
    return at_least_identity && monotone && sublinear && g_increasing && g_unbounded;
  }
};

// Checks the smoothness conditions on a log-spaced grid over [1, 1e6].
SmoothnessReport check_smoothness(const PowerFunction& p, double alpha);

// Inverse of g on [1, inf). Closed form for power laws; throws
// PreconditionError for non-smooth p or y < g(1).
double g_inverse(const PowerFunction& p, double y, double alpha, double tol = 1e-12);
// Bisection on log x to relative tolerance `tol`; same domain as g_inverse.
double g_inverse_numeric(const PowerFunction& p, double y, double alpha, double tol = 1e-12);

inline constexpr double kObliviousMaxCoordinate = 1e150;

// x_1 = 0, x_2 = 2, x_i = x_{i-1} + g^{-1}(2 x_{i-1}^alpha) on the x-axis.
// Throws PreconditionError once a coordinate would exceed kObliviousMaxCoordinate.
PointSet oblivious_lb_instance(int n, const PowerFunction& p, const SinrParams& params);

// True iff, with powers p(length), some direction's uncapped affectance
// exceeds 1, so the two links can never share a slot under p.
bool pairwise_oblivious_conflict(const Link& a, const Link& b, const PowerFunction& p, const SinrParams& params);

struct LengthClasses {
  double min_length = 0.0;
  std::map<int, std::vector<Link>> classes;  // ceil(lg(len / min_length)) -> links

  [[nodiscard]] int diversity() const { return static_cast<int>(classes.size()); }
};

LengthClasses length_classes(std::span<const Link> links);

// Separation factor t = 4 (alpha 4^2 zeta(alpha - 1))^(1/alpha).
double spacing_factor(double alpha);
// Colors per length class, C = 8 (4t)^2.
double color_bound(double alpha);

struct ObliviousSchedule {
  Schedule schedule;
  int diversity = 0;
  int max_colors_per_class = 0;
  double spacing = 0.0;
  double color_bound = 0.0;
  std::vector<std::string> diagnostics;
};

// Per length class, greedy first-fit coloring (decreasing length) so that
// same-colored senders are >= t * d apart, d the shortest link of the class.
// Each color is one slot.
ObliviousSchedule uniform_power_schedule(std::span<const Link> links, const SinrParams& params);
ObliviousSchedule linear_power_schedule(std::span<const Link> links, const SinrParams& params);

}  // namespace sinrconn
