#include "sinrconn/oblivious.hpp"

#include "sinrconn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sinrconn {

double log_smooth_g(const PowerFunction& p, double x, double alpha) {
  const double lp = p.log_eval(x, alpha);
  return std::log(0.5) + std::min(lp, alpha * std::log(x) - lp);
}

double smooth_g(const PowerFunction& p, double x, double alpha) { return std::exp(log_smooth_g(p, x, alpha)); }

SmoothnessReport check_smoothness(const PowerFunction& p, double alpha) {
  SmoothnessReport r;
  constexpr int kSamples = 600;
  constexpr double kRel = 1e-12;
  double prev_p = -1.0;
  double prev_g = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kSamples; ++k) {
    const double x = std::pow(10.0, 6.0 * k / kSamples);
    const double lp = p.log_eval(x, alpha);
    const double lx = std::log(x);
    if (lp < lx - kRel) r.at_least_identity = false;
    if (lp > alpha * lx + kRel) r.sublinear = false;
    if (k > 0 && lp < prev_p - kRel) r.monotone = false;
    const double lg = log_smooth_g(p, x, alpha);
    if (k > 0 && !(lg > prev_g)) r.g_increasing = false;
    prev_p = lp;
    prev_g = lg;
  }
  // g(x) = x^e / 2 for x >= 1 with e = min(tau, alpha - tau); unbounded iff e > 0.
  const double tau = p.exponent_for(alpha);
  if (!(std::min(tau, alpha - tau) > 0.0)) r.g_unbounded = false;
  return r;
}

namespace {

double growth_exponent(const PowerFunction& p, double alpha) {
  if (!check_smoothness(p, alpha).smooth()) {
    throw PreconditionError("power function " + p.name() + " is not smooth; g has no inverse");
  }
  const double tau = p.exponent_for(alpha);
  return std::min(tau, alpha - tau);
}

// g^{-1} from log y, so that the lower-bound recurrence does not overflow y.
double g_inverse_from_log(const PowerFunction& p, double log_y, double alpha) {
  const double e = growth_exponent(p, alpha);
  if (log_y < std::log(0.5)) throw PreconditionError("g_inverse: y below the range of g on [1, inf)");
  return std::exp((std::log(2.0) + log_y) / e);
}

}  // namespace

double g_inverse(const PowerFunction& p, double y, double alpha, double /*tol*/) {
  if (!(y > 0.0)) throw PreconditionError("g_inverse: y must be positive");
  return g_inverse_from_log(p, std::log(y), alpha);
}

double g_inverse_numeric(const PowerFunction& p, double y, double alpha, double tol) {
  growth_exponent(p, alpha);
  if (!(y >= 0.5)) throw PreconditionError("g_inverse: y below the range of g on [1, inf)");
  const double log_y = std::log(y);
  double lo = 0.0;  // log x
  double hi = 1.0;
  while (log_smooth_g(p, std::exp(hi), alpha) < log_y) {
    lo = hi;
    hi *= 2.0;
    if (hi > 700.0) throw PreconditionError("g_inverse: y out of double range");
  }
  // Relative tolerance on x is an absolute tolerance on log x.
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (log_smooth_g(p, std::exp(mid), alpha) < log_y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

PointSet oblivious_lb_instance(int n, const PowerFunction& p, const SinrParams& params) {
  params.validate();
  if (n < 2) throw PreconditionError("oblivious_lb_instance needs n >= 2");
  std::vector<double> xs{0.0, 2.0};
  while (static_cast<int>(xs.size()) < n) {
    const double prev = xs.back();
    const double log_y = std::log(2.0) + params.alpha * std::log(prev);
    const double next = prev + g_inverse_from_log(p, log_y, params.alpha);
    if (!std::isfinite(next) || next > kObliviousMaxCoordinate) {
      throw PreconditionError("oblivious_lb_instance: coordinates overflow beyond n = " +
                              std::to_string(xs.size()));
    }
    xs.push_back(next);
  }
  return PointSet::on_line(xs);
}

namespace {

bool log_affectance_exceeds_one(const Link& from, const Link& to, const PowerFunction& p, const SinrParams& params) {
  const double d = link_distance(from, to);
  if (d == 0.0) return true;
  const double log_a = std::log(params.beta) + p.log_eval(from.length, params.alpha) -
                       params.alpha * std::log(d) + params.alpha * std::log(to.length) -
                       p.log_eval(to.length, params.alpha);
  return log_a > 0.0;
}

}  // namespace

bool pairwise_oblivious_conflict(const Link& a, const Link& b, const PowerFunction& p, const SinrParams& params) {
  if (a == b) throw PreconditionError("conflict of a link with itself is undefined");
  if (links_share_node(a, b)) return true;
  return log_affectance_exceeds_one(a, b, p, params) || log_affectance_exceeds_one(b, a, p, params);
}

LengthClasses length_classes(std::span<const Link> links) {
  LengthClasses out;
  if (links.empty()) return out;
  out.min_length = std::min_element(links.begin(), links.end(), [](const Link& a, const Link& b) {
                     return a.length < b.length;
                   })->length;
  if (!(out.min_length > 0.0)) throw PreconditionError("length_classes: zero-length link");
  for (const auto& l : links) {
    const int m = static_cast<int>(std::ceil(std::log2(l.length / out.min_length)));
    out.classes[m].push_back(l);
  }
  return out;
}

double spacing_factor(double alpha) {
  const double zeta = std::riemann_zeta(alpha - 1.0);
  return 4.0 * std::pow(alpha * 16.0 * zeta, 1.0 / alpha);
}

double color_bound(double alpha) {
  const double t = spacing_factor(alpha);
  return 8.0 * (4.0 * t) * (4.0 * t);
}

namespace {

enum class ObliviousKind { uniform, linear };

ObliviousSchedule class_coloring_schedule(std::span<const Link> links, const SinrParams& params, ObliviousKind kind) {
  params.validate();
  ObliviousSchedule out;
  out.spacing = spacing_factor(params.alpha);
  out.color_bound = color_bound(params.alpha);
  out.schedule.source = kind == ObliviousKind::uniform ? "uniform-power" : "linear-power";
  const LengthClasses classes = length_classes(links);
  out.diversity = classes.diversity();

  for (const auto& [m, members] : classes.classes) {
    std::vector<Link> order = members;
    std::sort(order.begin(), order.end(), [](const Link& a, const Link& b) { return link_less(b, a); });
    const double shortest = order.back().length;
    const double separation = out.spacing * shortest;
    std::vector<std::vector<Link>> colors;
    for (const auto& l : order) {
      auto fits = [&](const std::vector<Link>& color) {
        return std::all_of(color.begin(), color.end(), [&](const Link& o) {
          return distance(o.sender_pos, l.sender_pos) >= separation;
        });
      };
      auto it = std::find_if(colors.begin(), colors.end(), fits);
      if (it == colors.end()) {
        colors.push_back({l});
      } else {
        it->push_back(l);
      }
    }
    out.max_colors_per_class = std::max(out.max_colors_per_class, static_cast<int>(colors.size()));
    if (static_cast<double>(colors.size()) > out.color_bound) {
      out.diagnostics.push_back("length class " + std::to_string(m) + " needed " + std::to_string(colors.size()) +
                                " colors, above the packing bound");
    }
    for (auto& color : colors) {
      Slot slot;
      double longest = 0.0;
      for (const auto& l : color) longest = std::max(longest, l.length);
      for (const auto& l : color) {
        double power = 1.0;
        if (kind == ObliviousKind::uniform) {
          if (params.noise > 0.0) power = 2.0 * params.beta * params.noise * std::pow(2.0 * longest, params.alpha);
        } else {
          power = std::pow(l.length, params.alpha) * std::max(1.0, 2.0 * params.beta * params.noise);
        }
        slot.powers.set(l, power);
      }
      slot.links = std::move(color);
      out.schedule.slots.push_back(std::move(slot));
    }
  }
  return out;
}

}  // namespace

ObliviousSchedule uniform_power_schedule(std::span<const Link> links, const SinrParams& params) {
  return class_coloring_schedule(links, params, ObliviousKind::uniform);
}

ObliviousSchedule linear_power_schedule(std::span<const Link> links, const SinrParams& params) {
  return class_coloring_schedule(links, params, ObliviousKind::linear);
}

}  // namespace sinrconn
