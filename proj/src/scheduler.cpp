#include "sinrconn/scheduler.hpp"

#include "sinrconn/errors.hpp"
#include "sinrconn/subset_partition.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>

namespace sinrconn {

std::size_t Schedule::link_count() const {
  std::size_t n = 0;
  for (const auto& s : slots) n += s.links.size();
  return n;
}

std::vector<Link> Schedule::all_links() const {
  std::vector<Link> out;
  out.reserve(link_count());
  for (const auto& s : slots) out.insert(out.end(), s.links.begin(), s.links.end());
  return out;
}

double SchedulerConfig::gamma_for(const SinrParams& params) const {
  if (gamma_override) {
    if (!(*gamma_override > 0.0 && *gamma_override < 1.0)) throw PreconditionError("gamma must lie in (0, 1)");
    return *gamma_override;
  }
  return gamma(params);
}

namespace {

std::vector<Link> sorted_copy(std::span<const Link> links) {
  std::vector<Link> sorted(links.begin(), links.end());
  sort_links(sorted);
  for (const auto& l : sorted) {
    if (!(l.length > 0.0)) {
      throw PreconditionError("zero-length link " + std::to_string(l.sender) + "->" + std::to_string(l.receiver));
    }
  }
  return sorted;
}

bool node_disjoint(std::span<const Link> links) {
  std::unordered_set<PointId> used;
  for (const auto& l : links) {
    if (!used.insert(l.sender).second || !used.insert(l.receiver).second) return false;
  }
  return true;
}

}  // namespace

std::vector<Link> schedule_select(std::span<const Link> links, double gamma_value, double alpha) {
  if (!(gamma_value > 0.0)) throw PreconditionError("gamma must be positive");
  const auto sorted = sorted_copy(links);
  std::vector<Link> selected;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < i && sum <= gamma_value; ++j) sum += f_value(sorted[j], sorted[i], alpha);
    if (sum <= gamma_value) selected.push_back(sorted[i]);
  }
  return selected;
}

PowerAssignment assign_powers(std::span<const Link> links, const SinrParams& params) {
  return assign_powers(links, params, InterferenceFilter{});
}

PowerAssignment assign_powers(std::span<const Link> links, const SinrParams& params, const InterferenceFilter& ignore) {
  params.validate();
  const auto sorted = sorted_copy(links);
  const std::size_t n = sorted.size();
  std::vector<double> power(n, 1.0);
  for (std::size_t ii = n; ii-- > 0;) {
    if (ii + 1 == n) continue;
    const Link& victim = sorted[ii];
    double sum = 0.0;
    for (std::size_t j = ii + 1; j < n; ++j) {
      if (ignore && ignore(sorted[j], victim)) continue;
      const double d = distance(sorted[j].sender_pos, victim.receiver_pos);
      if (d == 0.0) {
        throw PreconditionError("power recurrence: sender of " + std::to_string(sorted[j].sender) + "->" +
                                std::to_string(sorted[j].receiver) + " sits on a receiver of the slot");
      }
      sum += power[j] * std::pow(victim.length / d, params.alpha);
    }
    power[ii] = sum > 0.0 ? 4.0 * params.beta * sum : 1.0;
  }

  double factor = 1.0;
  if (params.noise > 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      const double need = 2.0 * params.beta * params.noise * std::pow(sorted[i].length, params.alpha) / power[i];
      factor = std::max(factor, need);
    }
  }
  PowerAssignment out;
  for (std::size_t i = 0; i < n; ++i) out.set(sorted[i], power[i] * factor);
  return out;
}

SlotResult schedule_one_slot(std::span<const Link> links, const SinrParams& params, const SchedulerConfig& config) {
  params.validate();
  SlotResult result;
  if (links.empty()) return result;
  result.slot.links = schedule_select(links, config.gamma_for(params), params.alpha);
  result.slot.powers = assign_powers(result.slot.links, params);
  std::set<LinkKey> taken;
  for (const auto& l : result.slot.links) taken.insert(l.key());
  for (const auto& l : links) {
    if (!taken.contains(l.key())) result.remainder.push_back(l);
  }
  return result;
}

Schedule connect(std::span<const Link> links, const SinrParams& params, const SchedulerConfig& config) {
  Schedule schedule;
  schedule.source = "connect";
  std::vector<Link> remaining(links.begin(), links.end());
  while (!remaining.empty()) {
    auto step = schedule_one_slot(remaining, params, config);
    if (step.slot.links.empty() || step.remainder.size() >= remaining.size()) {
      throw InternalError("connect made no progress on " + std::to_string(remaining.size()) + " links");
    }
    schedule.slots.push_back(std::move(step.slot));
    remaining = std::move(step.remainder);
  }
  return schedule;
}

std::pair<Schedule, Schedule> strong_connect(const PointSet& points, const SinrParams& params,
                                             const SchedulerConfig& config) {
  if (points.size() < 2) throw PreconditionError("strong_connect needs at least two points");
  const Tree tree = euclidean_mst(points);
  auto toward = connect(orient(points, tree, 0, Direction::toward), params, config);
  auto away = connect(orient(points, tree, 0, Direction::away), params, config);
  toward.source = "strong/toward-root";
  away.source = "strong/away-from-root";
  return {std::move(toward), std::move(away)};
}

std::vector<std::vector<Link>> sparsify(std::span<const Link> links, double gamma_value, double alpha) {
  const auto sorted = sorted_copy(links);
  std::vector<std::vector<Link>> bins;
  for (const auto& l : sorted) {
    bool placed = false;
    for (auto& bin : bins) {
      // l is the longest link of the bin so far, so only its own score changes.
      double score = 0.0;
      for (const auto& other : bin) score += f_value(other, l, alpha);
      if (score <= gamma_value) {
        bin.push_back(l);
        placed = true;
        break;
      }
    }
    if (!placed) bins.push_back({l});
  }
  return bins;
}

std::vector<double> oblivious_log_powers(std::span<const Link> links, const PowerFunction& p,
                                         const SinrParams& params) {
  std::vector<double> log_p;
  log_p.reserve(links.size());
  double lift = 0.0;
  for (const auto& l : links) {
    const double lp = p.log_eval(l.length, params.alpha);
    log_p.push_back(lp);
    if (params.noise > 0.0) {
      lift = std::max(lift, std::log(2.0 * params.beta * params.noise) + params.alpha * std::log(l.length) - lp);
    }
  }
  for (auto& v : log_p) v += lift;
  return log_p;
}

int min_slots_bruteforce(std::span<const Link> links, const SinrParams& params, const PowerMode& mode) {
  params.validate();
  const int n = static_cast<int>(links.size());
  if (n > kBruteforceMaxLinks) {
    throw PreconditionError("min_slots_bruteforce accepts at most " + std::to_string(kBruteforceMaxLinks) + " links");
  }
  auto admissible = [&](std::uint32_t mask) {
    std::vector<Link> block;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) block.push_back(links[static_cast<std::size_t>(i)]);
    }
    if (!node_disjoint(block)) return false;
    if (mode.kind == PowerMode::Kind::recurrence) {
      const auto powers = assign_powers(block, params);
      return is_feasible(block, powers, params).pass;
    }
    return is_feasible_log(block, oblivious_log_powers(block, mode.power, params), params).pass;
  };
  const auto result = min_subset_partition(n, admissible, kBruteforceMaxLinks);
  if (!result) throw PreconditionError("some link is infeasible even on its own");
  return result->blocks;
}

}  // namespace sinrconn
