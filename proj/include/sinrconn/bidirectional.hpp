#pragma once

#include "sinrconn/geometry.hpp"
#include "sinrconn/scheduler.hpp"
#include "sinrconn/sinr.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sinrconn {

// Half-duplex pair {first, second}: two antiparallel links with independent
// powers. The two directions never interfere with each other.
struct Pair {
  PointId first = 0;
  PointId second = 0;
  Vec2 first_pos = Vec2::Zero();
  Vec2 second_pos = Vec2::Zero();
  double length = 0.0;
  double power_forward = 1.0;   // first -> second
  double power_backward = 1.0;  // second -> first

  [[nodiscard]] Link forward() const;
  [[nodiscard]] Link backward() const;
  [[nodiscard]] bool same_endpoints(const Pair& other) const;
  [[nodiscard]] bool symmetric() const { return power_forward == power_backward; }
};

Pair make_pair(const PointSet& points, PointId a, PointId b, double power_forward = 1.0,
               double power_backward = 1.0);

// Pairs ordered by length, then (min id, max id).
bool pair_less(const Pair& a, const Pair& b);

// sum_{j,k in {1,2}} f_{from_j}(to_k); zero when both are the same pair.
double bidi_pair_f(const Pair& from, const Pair& to, double alpha);

// Sum of bidi_pair_f(p, probe) over all p in `pairs`.
double bidi_f_sum(std::span<const Pair> pairs, const Pair& probe, double alpha);

// Both directions of every pair, interference summed over both directions of
// every other pair. Report entries are ordered (forward, backward) per pair.
FeasibilityReport bidi_feasible(std::span<const Pair> pairs, const SinrParams& params);

struct BidiConfig {
  // Selection threshold for the 2x2 f-sum; defaults to gamma(params) / 4.
  std::optional<double> gamma_bidi;

  [[nodiscard]] double gamma_for(const SinrParams& params) const;
};

std::vector<Pair> bidi_select(std::span<const Pair> pairs, double gamma_bidi, double alpha);

// Runs the power recurrence over the flattened directed links, ignoring
// interference between the two directions of a pair.
std::vector<Pair> bidi_assign_powers(std::span<const Pair> pairs, const SinrParams& params);

// MST edges as pairs, scheduled round by round with bidi_select and
// bidi_assign_powers. Each slot lists both directions of every chosen pair.
Schedule bidi_connect(const PointSet& points, const SinrParams& params, const BidiConfig& config = {});
Schedule bidi_connect_pairs(std::span<const Pair> pairs, const SinrParams& params, const BidiConfig& config = {});

// Regroups a bidirectional slot into pairs. Throws if a link has no twin.
std::vector<Pair> pairs_from_slot(const Slot& slot);

inline constexpr int kSymmetricLbMaxPoints = 8;

// x_0 = 0, x_1 = 1, x_i = 2 x_{i-1}^2 on the x-axis.
PointSet symmetric_lb_instance(int n);

// max over direction choices a, b, c, d of (len_d len'_b / (d_{l'_c l_d} d_{l_a l'_b}))^alpha,
// the product of two affectances under any symmetric powers. A value > 1
// certifies that the two pairs never share a slot with symmetric powers.
double symmetric_conflict_certificate(const Pair& a, const Pair& b, const SinrParams& params);

}  // namespace sinrconn
