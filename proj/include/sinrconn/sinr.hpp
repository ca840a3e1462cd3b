#pragma once

#include "sinrconn/geometry.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace sinrconn {

struct SinrParams {
  double alpha = 3.0;  // path loss exponent, > 2
  double beta = 1.0;   // SINR threshold, >= 1
  double noise = 0.0;  // ambient noise, >= 0

  // Throws PreconditionError unless alpha > 2, beta >= 1, noise >= 0.
  void validate() const;
};

// Relative slack on the SINR threshold: a link passes if SINR >= beta * (1 - kFeasibilityTolerance).
inline constexpr double kFeasibilityTolerance = 1e-9;

class PowerAssignment {
 public:
  void set(const Link& link, double power);
  void set(LinkKey key, double power);
  [[nodiscard]] double at(const Link& link) const;
  [[nodiscard]] double at(LinkKey key) const;
  [[nodiscard]] bool contains(const Link& link) const { return powers_.contains(link.key()); }
  [[nodiscard]] std::size_t size() const { return powers_.size(); }
  [[nodiscard]] bool empty() const { return powers_.empty(); }
  [[nodiscard]] const std::map<LinkKey, double>& entries() const { return powers_; }
  void scale(double factor);

 private:
  std::map<LinkKey, double> powers_;
};

struct FeasibilityReport {
  std::vector<double> sinr;             // per link, in slot order
  std::vector<double> affectance_sum;   // capped affectances received, per link
  bool pass = true;                     // every SINR >= beta within tolerance
  bool affectance_pass = true;          // affectance-sum form of the same predicate
  std::optional<std::size_t> worst;     // index of the smallest SINR / beta
  double min_margin = 0.0;              // min over links of SINR / beta (inf for empty slots)
};

// Affectance of `from` on `to`: min{1, c_to * (P_from / d^alpha) / (P_to / len_to^alpha)}
// with d the distance from from's sender to to's receiver.
double affectance(const Link& from, const Link& to, const PowerAssignment& powers, const SinrParams& params);
// Same without the cap at 1.
double raw_affectance(const Link& from, const Link& to, const PowerAssignment& powers, const SinrParams& params);

// Checks the SINR condition for every link of the slot directly. Throws
// PreconditionError on missing powers or when two links share a point.
FeasibilityReport is_feasible(std::span<const Link> slot, const PowerAssignment& powers, const SinrParams& params);

// As is_feasible, with powers given as natural logarithms aligned with `slot`.
// Lets oblivious power functions be checked on instances whose powers overflow.
FeasibilityReport is_feasible_log(std::span<const Link> slot, std::span<const double> log_powers,
                                  const SinrParams& params);

// f_from(to): 0 unless from precedes to in the global link order, else
// min{1, len_from^alpha / d(from, to)^alpha} with d the symmetric link distance.
double f_value(const Link& from, const Link& to, double alpha);

// Sum over links l' in `links` with l' >= probe of f_probe(l').
double amenability_score(std::span<const Link> links, const Link& probe, double alpha);

bool is_amenable(std::span<const Link> links, std::span<const Link> probes, double rho, double alpha);

// For each l' in `links`, sum over l <= l' of f_l(l'). Aligned with `links`.
std::vector<double> kesselheim_scores(std::span<const Link> links, double alpha);

bool satisfies_kesselheim(std::span<const Link> links, double gamma, double alpha);

// 1 / (4 * 3^alpha * (4 beta + 2)).
double gamma(const SinrParams& params);

// Amenability threshold: twice the largest MST score measured over the frozen
// corpus (50 seeded uniform instances, n = 100, alpha = 3, probes = MST links).
inline constexpr double kDefaultRho = 2.0 * 6.63;

}  // namespace sinrconn
