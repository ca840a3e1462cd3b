#include "sinrconn/sinr.hpp"

#include "sinrconn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

namespace sinrconn {

void SinrParams::validate() const {
  if (!(alpha > 2.0) || !std::isfinite(alpha)) throw PreconditionError("alpha must be > 2");
  if (!(beta >= 1.0) || !std::isfinite(beta)) throw PreconditionError("beta must be >= 1");
  if (!(noise >= 0.0) || !std::isfinite(noise)) throw PreconditionError("noise must be >= 0");
}

void PowerAssignment::set(const Link& link, double power) { set(link.key(), power); }

void PowerAssignment::set(LinkKey key, double power) {
  if (!(power > 0.0) || !std::isfinite(power)) {
    throw PreconditionError("power must be positive and finite");
  }
  powers_[key] = power;
}

double PowerAssignment::at(const Link& link) const { return at(link.key()); }

double PowerAssignment::at(LinkKey key) const {
  const auto it = powers_.find(key);
  if (it == powers_.end()) {
    throw PreconditionError("missing power for link " + std::to_string(key.first) + "->" +
                            std::to_string(key.second));
  }
  return it->second;
}

void PowerAssignment::scale(double factor) {
  for (auto& [key, p] : powers_) p *= factor;
}

namespace {

double noise_coefficient(const Link& to, double power_to, const SinrParams& params) {
  if (params.noise == 0.0) return params.beta;
  const double denom = 1.0 - params.beta * params.noise * std::pow(to.length, params.alpha) / power_to;
  if (!(denom > 0.0)) {
    throw PreconditionError("link " + std::to_string(to.sender) + "->" + std::to_string(to.receiver) +
                            " has insufficient power to overcome noise");
  }
  return params.beta / denom;
}

void require_node_disjoint(std::span<const Link> slot) {
  std::unordered_set<PointId> used;
  used.reserve(slot.size() * 2);
  for (const auto& l : slot) {
    if (!used.insert(l.sender).second || !used.insert(l.receiver).second) {
      throw PreconditionError("slot is not node-disjoint: point " + std::to_string(l.sender) + " or " +
                              std::to_string(l.receiver) + " used twice");
    }
  }
}

}  // namespace

double raw_affectance(const Link& from, const Link& to, const PowerAssignment& powers, const SinrParams& params) {
  if (from == to) throw PreconditionError("affectance of a link on itself is undefined");
  const double p_from = powers.at(from);
  const double p_to = powers.at(to);
  const double c = noise_coefficient(to, p_to, params);
  const double d = link_distance(from, to);
  if (d == 0.0) return std::numeric_limits<double>::infinity();
  return c * (p_from / p_to) * std::pow(to.length / d, params.alpha);
}

double affectance(const Link& from, const Link& to, const PowerAssignment& powers, const SinrParams& params) {
  return std::min(1.0, raw_affectance(from, to, powers, params));
}

FeasibilityReport is_feasible(std::span<const Link> slot, const PowerAssignment& powers, const SinrParams& params) {
  std::vector<double> log_powers;
  log_powers.reserve(slot.size());
  for (const auto& l : slot) log_powers.push_back(std::log(powers.at(l)));
  return is_feasible_log(slot, log_powers, params);
}

FeasibilityReport is_feasible_log(std::span<const Link> slot, std::span<const double> log_powers,
                                  const SinrParams& params) {
  params.validate();
  if (log_powers.size() != slot.size()) throw PreconditionError("power vector does not match slot");
  require_node_disjoint(slot);

  const std::size_t k = slot.size();
  FeasibilityReport report;
  report.sinr.resize(k);
  report.affectance_sum.resize(k);
  report.min_margin = std::numeric_limits<double>::infinity();
  const double log_noise = params.noise > 0.0 ? std::log(params.noise) : -std::numeric_limits<double>::infinity();
  const double raw_limit = 1.0 / (1.0 - kFeasibilityTolerance);

  std::vector<double> terms(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Link& li = slot[i];
    const double log_signal = log_powers[i] - params.alpha * std::log(li.length);
    double peak = log_noise;
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      terms[j] = log_powers[j] - params.alpha * std::log(link_distance(slot[j], li));
      peak = std::max(peak, terms[j]);
    }
    double sinr = std::numeric_limits<double>::infinity();
    if (std::isfinite(peak)) {
      double scaled = params.noise > 0.0 ? std::exp(log_noise - peak) : 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i) scaled += std::exp(terms[j] - peak);
      }
      sinr = std::exp(log_signal - peak - std::log(scaled));
    }
    report.sinr[i] = sinr;

    // Affectance route: a_j(i) = c_i * exp(term_j - log_signal), c_i = beta / (1 - beta N / signal).
    const double noise_share = params.noise > 0.0 ? params.beta * std::exp(log_noise - log_signal) : 0.0;
    double capped = 0.0;
    bool over = false;
    if (noise_share >= 1.0) {
      capped = std::numeric_limits<double>::infinity();
      over = true;
    } else {
      const double c = params.beta / (1.0 - noise_share);
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        const double a = c * std::exp(terms[j] - log_signal);
        over = over || a > raw_limit;
        capped += std::min(1.0, a);
      }
    }
    report.affectance_sum[i] = capped;
    if (over || capped > raw_limit) report.affectance_pass = false;

    const double margin = sinr / params.beta;
    if (margin < 1.0 - kFeasibilityTolerance) report.pass = false;
    if (!report.worst || margin < report.min_margin) {
      report.worst = i;
      report.min_margin = margin;
    }
  }
  return report;
}

double f_value(const Link& from, const Link& to, double alpha) {
  if (from == to || !link_less(from, to)) return 0.0;
  const double d = symmetric_link_distance(from, to);
  if (d <= from.length) return 1.0;
  return std::pow(from.length / d, alpha);
}

double amenability_score(std::span<const Link> links, const Link& probe, double alpha) {
  double sum = 0.0;
  for (const auto& l : links) sum += f_value(probe, l, alpha);
  return sum;
}

bool is_amenable(std::span<const Link> links, std::span<const Link> probes, double rho, double alpha) {
  return std::all_of(probes.begin(), probes.end(),
                     [&](const Link& p) { return amenability_score(links, p, alpha) <= rho; });
}

std::vector<double> kesselheim_scores(std::span<const Link> links, double alpha) {
  std::vector<double> scores(links.size(), 0.0);
  for (std::size_t i = 0; i < links.size(); ++i) {
    for (std::size_t j = 0; j < links.size(); ++j) scores[i] += f_value(links[j], links[i], alpha);
  }
  return scores;
}

bool satisfies_kesselheim(std::span<const Link> links, double gamma_value, double alpha) {
  const auto scores = kesselheim_scores(links, alpha);
  return std::all_of(scores.begin(), scores.end(), [&](double s) { return s <= gamma_value; });
}

double gamma(const SinrParams& params) {
  return 1.0 / (4.0 * std::pow(3.0, params.alpha) * (4.0 * params.beta + 2.0));
}

}  // namespace sinrconn
