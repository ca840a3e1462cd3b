#pragma once

#include "sinrconn/geometry.hpp"
#include "sinrconn/scheduler.hpp"
#include "sinrconn/sinr.hpp"

#include <string>
#include <vector>

namespace sinrconn {

struct AggregationSchedule {
  std::vector<Slot> slots;
  std::vector<Link> tree;         // union of the slots
  PointId sink = 0;
  std::vector<int> active_sizes;  // |P_1|, |P_2|, ..., ending with 1

  [[nodiscard]] int latency() const { return static_cast<int>(slots.size()); }
};

// Round i: nearest-neighbor forest on the active points, one Schedule slot,
// reduced to a matching, then the senders leave the active set. The last
// active point is the sink.
AggregationSchedule mlas(const PointSet& points, const SinrParams& params, const SchedulerConfig& config = {});

struct AggregationReport {
  bool slots_feasible = true;
  bool spanning_in_arborescence = true;
  bool ordering = true;
  std::vector<double> shrinkage;  // |P_{i+1}| / |P_i| per round
  double max_shrinkage = 0.0;
  std::vector<std::string> issues;

  [[nodiscard]] bool pass() const { return slots_feasible && spanning_in_arborescence && ordering; }
};

// Independent check of an aggregation schedule over `point_count` points:
// per-slot SINR feasibility, spanning in-arborescence, ordering requirement,
// and per-round shrinkage of the active set.
AggregationReport verify_aggregation(const AggregationSchedule& schedule, int point_count, const SinrParams& params);

}  // namespace sinrconn
