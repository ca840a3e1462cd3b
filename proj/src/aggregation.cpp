#include "sinrconn/aggregation.hpp"

#include "sinrconn/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sinrconn {

AggregationSchedule mlas(const PointSet& points, const SinrParams& params, const SchedulerConfig& config) {
  params.validate();
  if (points.empty()) throw PreconditionError("mlas needs at least one point");
  AggregationSchedule out;
  std::vector<PointId> active(static_cast<std::size_t>(points.size()));
  for (PointId i = 0; i < points.size(); ++i) active[static_cast<std::size_t>(i)] = i;
  out.active_sizes.push_back(points.size());

  while (active.size() > 1) {
    const auto forest = nearest_neighbor_forest(points, active);
    auto step = schedule_one_slot(forest, params, config);

    // Reduce to a matching, shorter links first.
    std::vector<Link> chosen = step.slot.links;
    sort_links(chosen);
    std::set<PointId> used;
    std::vector<Link> matching;
    for (const auto& l : chosen) {
      if (used.contains(l.sender) || used.contains(l.receiver)) continue;
      used.insert(l.sender);
      used.insert(l.receiver);
      matching.push_back(l);
    }
    if (matching.empty()) {
      throw InternalError("mlas scheduled no link among " + std::to_string(active.size()) + " points");
    }
    Slot slot;
    slot.powers = matching.size() == step.slot.links.size() ? step.slot.powers : assign_powers(matching, params);
    slot.links = std::move(matching);

    std::set<PointId> senders;
    for (const auto& l : slot.links) senders.insert(l.sender);
    std::erase_if(active, [&](PointId p) { return senders.contains(p); });
    out.tree.insert(out.tree.end(), slot.links.begin(), slot.links.end());
    out.slots.push_back(std::move(slot));
    out.active_sizes.push_back(static_cast<int>(active.size()));
  }
  out.sink = active.front();
  return out;
}

AggregationReport verify_aggregation(const AggregationSchedule& schedule, int point_count, const SinrParams& params) {
  AggregationReport report;

  for (std::size_t i = 0; i < schedule.slots.size(); ++i) {
    const Slot& slot = schedule.slots[i];
    try {
      if (!is_feasible(slot.links, slot.powers, params).pass) {
        report.slots_feasible = false;
        report.issues.push_back("slot " + std::to_string(i) + " is not SINR-feasible");
      }
    } catch (const PreconditionError& e) {
      report.slots_feasible = false;
      report.issues.push_back("slot " + std::to_string(i) + ": " + e.what());
    }
  }

  // Out-link of every point and the slot it fires in.
  std::map<PointId, std::pair<PointId, std::size_t>> parent;
  for (std::size_t i = 0; i < schedule.slots.size(); ++i) {
    for (const auto& l : schedule.slots[i].links) {
      if (l.sender < 0 || l.sender >= point_count || l.receiver < 0 || l.receiver >= point_count) {
        report.spanning_in_arborescence = false;
        report.issues.push_back("link endpoint outside the point set");
        continue;
      }
      if (!parent.emplace(l.sender, std::make_pair(l.receiver, i)).second) {
        report.spanning_in_arborescence = false;
        report.issues.push_back("point " + std::to_string(l.sender) + " sends more than once");
      }
    }
  }
  std::vector<PointId> roots;
  for (PointId p = 0; p < point_count; ++p) {
    if (!parent.contains(p)) roots.push_back(p);
  }
  if (roots.size() != 1) {
    report.spanning_in_arborescence = false;
    report.issues.push_back("expected exactly one root, found " + std::to_string(roots.size()));
  }
  if (report.spanning_in_arborescence) {
    for (PointId p = 0; p < point_count; ++p) {
      PointId cur = p;
      int hops = 0;
      while (parent.contains(cur) && hops <= point_count) {
        cur = parent.at(cur).first;
        ++hops;
      }
      if (hops > point_count || cur != roots.front()) {
        report.spanning_in_arborescence = false;
        report.issues.push_back("point " + std::to_string(p) + " does not reach the root");
        break;
      }
    }
  }

  // Each link must fire strictly before the out-link of its receiver.
  for (const auto& [sender, target] : parent) {
    const auto [receiver, slot_index] = target;
    const auto up = parent.find(receiver);
    if (up != parent.end() && up->second.second <= slot_index) {
      report.ordering = false;
      report.issues.push_back("link " + std::to_string(sender) + "->" + std::to_string(receiver) +
                              " is not scheduled before its parent link");
    }
  }

  int active = point_count;
  for (const auto& slot : schedule.slots) {
    const int next = active - static_cast<int>(slot.links.size());
    if (active > 0) report.shrinkage.push_back(static_cast<double>(next) / active);
    active = next;
  }
  for (double r : report.shrinkage) report.max_shrinkage = std::max(report.max_shrinkage, r);
  return report;
}

}  // namespace sinrconn
