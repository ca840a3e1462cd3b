#include "sinrconn/bidirectional.hpp"

#include "sinrconn/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <unordered_set>

namespace sinrconn {

Link Pair::forward() const { return Link{first, second, first_pos, second_pos, length}; }

Link Pair::backward() const { return Link{second, first, second_pos, first_pos, length}; }

bool Pair::same_endpoints(const Pair& other) const {
  return std::minmax(first, second) == std::minmax(other.first, other.second);
}

Pair make_pair(const PointSet& points, PointId a, PointId b, double power_forward, double power_backward) {
  const Link l = make_link(points, a, b);
  return Pair{a, b, l.sender_pos, l.receiver_pos, l.length, power_forward, power_backward};
}

bool pair_less(const Pair& a, const Pair& b) {
  if (a.length != b.length) return a.length < b.length;
  return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
}

double bidi_pair_f(const Pair& from, const Pair& to, double alpha) {
  if (from.same_endpoints(to)) return 0.0;
  const std::array<Link, 2> fl{from.forward(), from.backward()};
  const std::array<Link, 2> tl{to.forward(), to.backward()};
  double sum = 0.0;
  for (const auto& a : fl) {
    for (const auto& b : tl) sum += f_value(a, b, alpha);
  }
  return sum;
}

double bidi_f_sum(std::span<const Pair> pairs, const Pair& probe, double alpha) {
  double sum = 0.0;
  for (const auto& p : pairs) sum += bidi_pair_f(p, probe, alpha);
  return sum;
}

FeasibilityReport bidi_feasible(std::span<const Pair> pairs, const SinrParams& params) {
  params.validate();
  std::unordered_set<PointId> used;
  for (const auto& p : pairs) {
    if (p.first == p.second) throw PreconditionError("pair endpoints must differ");
    if (!used.insert(p.first).second || !used.insert(p.second).second) {
      throw PreconditionError("pairs are not node-disjoint");
    }
  }
  const std::size_t m = pairs.size();
  FeasibilityReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  report.sinr.reserve(2 * m);
  report.affectance_sum.reserve(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (int dir = 0; dir < 2; ++dir) {
      const Link victim = dir == 0 ? pairs[i].forward() : pairs[i].backward();
      const double p_victim = dir == 0 ? pairs[i].power_forward : pairs[i].power_backward;
      const double signal = p_victim / std::pow(victim.length, params.alpha);
      double interference = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        interference += pairs[j].power_forward / std::pow(link_distance(pairs[j].forward(), victim), params.alpha);
        interference += pairs[j].power_backward / std::pow(link_distance(pairs[j].backward(), victim), params.alpha);
      }
      const double denom = interference + params.noise;
      const double sinr = denom > 0.0 ? signal / denom : std::numeric_limits<double>::infinity();
      report.sinr.push_back(sinr);
      const double noise_share = params.beta * params.noise / signal;
      double aff = std::numeric_limits<double>::infinity();
      if (noise_share < 1.0) aff = params.beta / (1.0 - noise_share) * interference / signal;
      report.affectance_sum.push_back(aff);
      if (aff > 1.0 / (1.0 - kFeasibilityTolerance)) report.affectance_pass = false;
      const double margin = sinr / params.beta;
      if (margin < 1.0 - kFeasibilityTolerance) report.pass = false;
      if (!report.worst || margin < report.min_margin) {
        report.worst = report.sinr.size() - 1;
        report.min_margin = margin;
      }
    }
  }
  return report;
}

double BidiConfig::gamma_for(const SinrParams& params) const {
  const double g = gamma_bidi.value_or(gamma(params) / 4.0);
  if (!(g > 0.0)) throw PreconditionError("gamma_bidi must be positive");
  return g;
}

std::vector<Pair> bidi_select(std::span<const Pair> pairs, double gamma_bidi, double alpha) {
  std::vector<Pair> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end(), pair_less);
  std::vector<Pair> selected;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!(sorted[i].length > 0.0)) throw PreconditionError("zero-length pair");
    double sum = 0.0;
    for (std::size_t j = 0; j < i && sum <= gamma_bidi; ++j) sum += bidi_pair_f(sorted[j], sorted[i], alpha);
    if (sum <= gamma_bidi) selected.push_back(sorted[i]);
  }
  return selected;
}

std::vector<Pair> bidi_assign_powers(std::span<const Pair> pairs, const SinrParams& params) {
  std::vector<Link> flat;
  flat.reserve(2 * pairs.size());
  for (const auto& p : pairs) {
    flat.push_back(p.forward());
    flat.push_back(p.backward());
  }
  const auto twins = [](const Link& interferer, const Link& victim) {
    return interferer.sender == victim.receiver && interferer.receiver == victim.sender;
  };
  const PowerAssignment powers = assign_powers(flat, params, twins);
  std::vector<Pair> out(pairs.begin(), pairs.end());
  for (auto& p : out) {
    p.power_forward = powers.at(p.forward());
    p.power_backward = powers.at(p.backward());
  }
  return out;
}

Schedule bidi_connect_pairs(std::span<const Pair> pairs, const SinrParams& params, const BidiConfig& config) {
  params.validate();
  const double g = config.gamma_for(params);
  Schedule schedule;
  schedule.source = "bidi-connect";
  schedule.model = LinkModel::bidirectional;
  std::vector<Pair> remaining(pairs.begin(), pairs.end());
  while (!remaining.empty()) {
    const auto chosen = bidi_assign_powers(bidi_select(remaining, g, params.alpha), params);
    if (chosen.empty()) throw InternalError("bidi_connect made no progress");
    Slot slot;
    for (const auto& p : chosen) {
      slot.links.push_back(p.forward());
      slot.links.push_back(p.backward());
      slot.powers.set(p.forward(), p.power_forward);
      slot.powers.set(p.backward(), p.power_backward);
    }
    std::vector<Pair> rest;
    for (const auto& p : remaining) {
      const bool taken = std::any_of(chosen.begin(), chosen.end(), [&](const Pair& c) { return c.same_endpoints(p); });
      if (!taken) rest.push_back(p);
    }
    schedule.slots.push_back(std::move(slot));
    remaining = std::move(rest);
  }
  return schedule;
}

Schedule bidi_connect(const PointSet& points, const SinrParams& params, const BidiConfig& config) {
  if (points.size() < 2) throw PreconditionError("bidi_connect needs at least two points");
  std::vector<Pair> pairs;
  for (const auto& e : euclidean_mst(points).edges) pairs.push_back(make_pair(points, e.u, e.v));
  return bidi_connect_pairs(pairs, params, config);
}

std::vector<Pair> pairs_from_slot(const Slot& slot) {
  std::map<LinkKey, const Link*> by_key;
  for (const auto& l : slot.links) by_key[l.key()] = &l;
  std::vector<Pair> pairs;
  std::set<LinkKey> done;
  for (const auto& l : slot.links) {
    if (done.contains(l.key())) continue;
    const auto twin = by_key.find({l.receiver, l.sender});
    if (twin == by_key.end()) {
      throw PreconditionError("bidirectional slot link " + std::to_string(l.sender) + "->" +
                              std::to_string(l.receiver) + " has no antiparallel twin");
    }
    const Link& fwd = l.sender < l.receiver ? l : *twin->second;
    const Link& bwd = l.sender < l.receiver ? *twin->second : l;
    pairs.push_back(Pair{fwd.sender, fwd.receiver, fwd.sender_pos, fwd.receiver_pos, fwd.length,
                         slot.powers.at(fwd), slot.powers.at(bwd)});
    done.insert(l.key());
    done.insert(twin->first);
  }
  return pairs;
}

PointSet symmetric_lb_instance(int n) {
  if (n < 2) throw PreconditionError("symmetric_lb_instance needs n >= 2");
  if (n > kSymmetricLbMaxPoints) {
    throw PreconditionError("symmetric_lb_instance: n > " + std::to_string(kSymmetricLbMaxPoints) +
                            " is not exactly representable in double precision");
  }
  std::vector<double> xs{0.0, 1.0};
  while (static_cast<int>(xs.size()) < n) xs.push_back(2.0 * xs.back() * xs.back());
  return PointSet::on_line(xs);
}

double symmetric_conflict_certificate(const Pair& a, const Pair& b, const SinrParams& params) {
  if (a.same_endpoints(b)) throw PreconditionError("certificate needs two distinct pairs");
  const std::array<Link, 2> la{a.forward(), a.backward()};
  const std::array<Link, 2> lb{b.forward(), b.backward()};
  double best = 0.0;
  for (const auto& a_dir : la) {
    for (const auto& b_dir : lb) {
      for (const auto& c_dir : lb) {
        for (const auto& d_dir : la) {
          const double d1 = link_distance(c_dir, d_dir);
          const double d2 = link_distance(a_dir, b_dir);
          if (d1 == 0.0 || d2 == 0.0) return std::numeric_limits<double>::infinity();
          best = std::max(best, std::pow(d_dir.length * b_dir.length / (d1 * d2), params.alpha));
        }
      }
    }
  }
  return best;
}

}  // namespace sinrconn
