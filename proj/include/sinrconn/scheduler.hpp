#pragma once

#include "sinrconn/geometry.hpp"
#include "sinrconn/power_function.hpp"
#include "sinrconn/sinr.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sinrconn {

struct Slot {
  std::vector<Link> links;
  PowerAssignment powers;
};

enum class LinkModel { unidirectional, bidirectional };

struct Schedule {
  std::vector<Slot> slots;
  std::string source;
  LinkModel model = LinkModel::unidirectional;

  [[nodiscard]] std::size_t link_count() const;
  [[nodiscard]] std::vector<Link> all_links() const;
};

struct SchedulerConfig {
  // Replaces gamma(params) when set. The theoretical value is tiny; larger
  // values are allowed for experiments since every slot is verified anyway.
  std::optional<double> gamma_override;

  [[nodiscard]] double gamma_for(const SinrParams& params) const;
};

// Greedy pass in increasing link order: a link is admitted iff the f-sum over
// ALL earlier links of the sorted input is <= gamma. Output is sorted.
std::vector<Link> schedule_select(std::span<const Link> links, double gamma_value, double alpha);

// Returns true for (interferer, victim) pairs the recurrence must ignore.
using InterferenceFilter = std::function<bool(const Link& interferer, const Link& victim)>;

// Backward power recurrence over the links sorted increasingly:
//   P_last = 1,  P_i = 4 beta * sum_{j > i} P_j * len_i^alpha / d(s_j, r_i)^alpha,
// then one common factor max(1, max 2 beta N len^alpha / P) for noise.
PowerAssignment assign_powers(std::span<const Link> links, const SinrParams& params);
PowerAssignment assign_powers(std::span<const Link> links, const SinrParams& params, const InterferenceFilter& ignore);

struct SlotResult {
  Slot slot;
  std::vector<Link> remainder;
};

SlotResult schedule_one_slot(std::span<const Link> links, const SinrParams& params,
                             const SchedulerConfig& config = {});

// Repeats schedule_one_slot until every link is scheduled.
Schedule connect(std::span<const Link> links, const SinrParams& params, const SchedulerConfig& config = {});

// MST oriented toward and away from point 0, each scheduled by connect.
std::pair<Schedule, Schedule> strong_connect(const PointSet& points, const SinrParams& params,
                                             const SchedulerConfig& config = {});

// First-fit of the links (increasing order) into bins that each satisfy the
// Kesselheim condition with gamma.
std::vector<std::vector<Link>> sparsify(std::span<const Link> links, double gamma_value, double alpha);

struct PowerMode {
  enum class Kind { recurrence, oblivious };
  Kind kind = Kind::recurrence;
  PowerFunction power;  // used when kind == oblivious

  static PowerMode recurrence() { return {}; }
  static PowerMode oblivious(PowerFunction p) { return {Kind::oblivious, p}; }
};

inline constexpr int kBruteforceMaxLinks = 10;

// Exact minimum number of SINR-feasible blocks partitioning `links`. A block
// is admissible when the recurrence powers (or the oblivious powers) make it
// feasible. Throws PreconditionError for more than kBruteforceMaxLinks links.
int min_slots_bruteforce(std::span<const Link> links, const SinrParams& params, const PowerMode& mode);

// Log-powers of an oblivious assignment, raised by one common factor so that
// every link keeps a factor-2 margin over noise.
std::vector<double> oblivious_log_powers(std::span<const Link> links, const PowerFunction& p,
                                         const SinrParams& params);

}  // namespace sinrconn
