// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
#include "oracles.hpp"
#include "sinrconn/aggregation.hpp"
#include "sinrconn/bidirectional.hpp"
#include "sinrconn/instances.hpp"
#include "sinrconn/netdesign.hpp"
#include "sinrconn/oblivious.hpp"
#include "sinrconn/scheduler.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace sinrconn;

namespace {

constexpr double kSinrSlack = 1e-9;
constexpr double kGrowthRatio = 2.5;
constexpr int kG1Partition = 2;
constexpr int kMaxDiscEndpoints = 9;
constexpr double kAnnulusK = 836.0;
constexpr double kMlasC = 19.0;
constexpr double kOracleRatio = 3.0;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

std::vector<Link> mst_links(const PointSet& pts) { return orient(pts, euclidean_mst(pts), 0, Direction::toward); }

std::vector<oracle::P> raw_points(const PointSet& pts) {
  std::vector<oracle::P> out;
  for (PointId i = 0; i < pts.size(); ++i) out.push_back({pts.position(i).x(), pts.position(i).y()});
  return out;
}

std::vector<oracle::L> raw_links(std::span<const Link> links) {
  std::vector<oracle::L> out;
  for (const auto& l : links) out.push_back({l.sender, l.receiver});
  return out;
}

bool slots_feasible(const Schedule& s, const SinrParams& params) {
  for (const auto& slot : s.slots) {
    if (!is_feasible(slot.links, slot.powers, params).pass) return false;
  }
  return true;
}

// SINR >= beta for links with powers given as logs, all in log space. twin[i] is
// the index of a link that does not interfere with link i, or -1.
bool log_sinr_ok(const std::vector<oracle::P>& pts, const std::vector<oracle::L>& links,
                 const std::vector<double>& log_p, const std::vector<int>& twin, double alpha, double beta) {
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto& r = pts[static_cast<std::size_t>(links[i].r)];
    const double signal = log_p[i] - alpha * std::log(oracle::dist(pts[static_cast<std::size_t>(links[i].s)], r));
    std::vector<double> terms;
    for (std::size_t j = 0; j < links.size(); ++j) {
      if (j == i || twin[i] == static_cast<int>(j)) continue;
      const double d = oracle::dist(pts[static_cast<std::size_t>(links[j].s)], r);
      if (d == 0.0) return false;
      terms.push_back(log_p[j] - alpha * std::log(d));
    }
    if (terms.empty()) continue;
    const double top = *std::max_element(terms.begin(), terms.end());
    double acc = 0.0;
    for (double t : terms) acc += std::exp(t - top);
    if (signal - (top + std::log(acc)) < std::log(beta) - kSinrSlack) return false;
  }
  return true;
}

Outcome c1_soundness() {
  const SinrParams params;
  const double g = gamma(params);
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int failures = 0;
  std::size_t total = 0;
  std::size_t biggest = 0;
  for (int set = 0; set < 1000; ++set) {
    const int m = 10 + set % 40;
    std::vector<Vec2> pos;
    for (int i = 0; i < m; ++i) {
      const Vec2 s(unit(rng), unit(rng));
      const double len = std::exp(std::log(1e-3) + unit(rng) * std::log(50.0));
      const double th = 2 * std::numbers::pi * unit(rng);
      pos.push_back(s);
      pos.push_back(s + len * Vec2(std::cos(th), std::sin(th)));
    }
    const PointSet pts(pos);
    std::vector<Link> links;
    for (int i = 0; i < m; ++i) links.push_back(make_link(pts, 2 * i, 2 * i + 1));
    const auto chosen = schedule_select(links, g, params.alpha);
    const auto rp = raw_points(pts);
    if (!oracle::kesselheim_ok(rp, raw_links(chosen), g, params.alpha)) {
      ++failures;
      continue;
    }
    total += chosen.size();
    biggest = std::max(biggest, chosen.size());
    const PowerAssignment p = assign_powers(chosen, params);
    const auto rep = is_feasible(chosen, p, params);
    bool ok = rep.pass;
    for (double s : rep.sinr) ok = ok && s >= params.beta * (1.0 - kSinrSlack);
    std::vector<double> pw;
    for (const auto& l : chosen) pw.push_back(p.at(l));
    for (double s : oracle::sinr(rp, raw_links(chosen), pw, params.alpha, params.noise)) {
      ok = ok && s >= params.beta * (1.0 - kSinrSlack);
    }
    if (!ok) ++failures;
  }
  std::ostringstream os;
  os << "1000 sets, " << total << " links, largest " << biggest << ", failures " << failures;
  return {failures == 0, os.str()};
}

Outcome c2_growth() {
  const SinrParams params;
  std::vector<double> medians;
  bool verified = true;
  for (int n : {64, 256, 1024}) {
    std::vector<std::size_t> counts;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Schedule s = connect(mst_links(gen_uniform(n, seed).points), params);
      verified = verified && s.link_count() == static_cast<std::size_t>(n - 1) && slots_feasible(s, params);
      counts.push_back(s.slots.size());
    }
    std::sort(counts.begin(), counts.end());
    medians.push_back(0.5 * static_cast<double>(counts[9] + counts[10]));
  }
  const double ratio = medians[2] / medians[0];
  std::ostringstream os;
  os << "median slots " << medians[0] << " / " << medians[1] << " / " << medians[2] << ", ratio " << ratio
     << " (limit " << kGrowthRatio << "), slots verified " << (verified ? "yes" : "no");
  return {verified && ratio <= kGrowthRatio, os.str()};
}

int kesselheim_partition_oracle(const PointSet& pts, const std::vector<Link>& links, double g, double alpha) {
  const auto rp = raw_points(pts);
  return oracle::min_partition(static_cast<int>(links.size()), [&](const std::vector<int>& block) {
    std::vector<oracle::L> b;
    for (int i : block) b.push_back({links[static_cast<std::size_t>(i)].sender, links[static_cast<std::size_t>(i)].receiver});
    return oracle::kesselheim_ok(rp, b, g, alpha);
  });
}

Outcome c3_g1() {
  const SinrParams params;
  const double g = gamma(params);
  const PointSet pts = PointSet::on_line(gadget_g1().to_doubles());
  bool pass = true;
  std::ostringstream os;
  for (const auto o : {LineOrientation::left_to_right, LineOrientation::right_to_left}) {
    const auto links = line_mst_links(pts, o);
    const int p = partition_number(links, g, params.alpha);
    const int want = kesselheim_partition_oracle(pts, links, g, params.alpha);
    pass = pass && p == kG1Partition && p == want;
    os << (o == LineOrientation::left_to_right ? "left-to-right" : "right-to-left") << " P=" << p
       << " oracle=" << want << "; ";
  }
  os << "required " << kG1Partition;
  return {pass, os.str()};
}

Outcome c4_g2() {
  const SinrParams params;
  const double g = gamma(params);
  GadgetOptions opts;
  opts.max_copies = 2;
  const GadgetBuild b = gadget_gt(2, params, opts);
  const PointSet pts = PointSet::on_line(b.gadget.to_doubles());
  const auto links = line_mst_links(pts);
  const int p = partition_number(links, g, params.alpha);
  const int want = kesselheim_partition_oracle(pts, links, g, params.alpha);
  std::ostringstream os;
  os << "P(G2)=" << p << " oracle=" << want << ", " << links.size() << " links, " << b.copies << " of "
     << b.full_copies << " copies";
  return {p >= 3 && p == want, os.str()};
}

Outcome c5_bidi() {
  const SinrParams params;
  const PointSet pts = symmetric_lb_instance(6);
  std::vector<Pair> pairs;
  for (const auto& e : euclidean_mst(pts).edges) pairs.push_back(make_pair(pts, e.u, e.v));
  int certified = 0;
  double weakest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const double c = symmetric_conflict_certificate(pairs[i], pairs[j], params);
      weakest = std::min(weakest, c);
      if (c > 1.0) ++certified;
    }
  }
  std::vector<Link> forward;
  for (const auto& p : pairs) forward.push_back(p.forward());
  const int brute = min_slots_bruteforce(forward, params, PowerMode::oblivious(PowerFunction::mean()));

  // Bidirectional model with symmetric mean powers, checked from the definition.
  const auto rp = raw_points(pts);
  const int model = oracle::min_partition(static_cast<int>(pairs.size()), [&](const std::vector<int>& block) {
    std::vector<oracle::L> links;
    std::vector<double> lp;
    std::vector<int> twin;
    for (int i : block) {
      const auto& p = pairs[static_cast<std::size_t>(i)];
      const double l = std::log(std::pow(p.length, params.alpha / 2.0));
      twin.push_back(static_cast<int>(links.size()) + 1);
      links.push_back({p.first, p.second});
      lp.push_back(l);
      twin.push_back(static_cast<int>(links.size()) - 1);
      links.push_back({p.second, p.first});
      lp.push_back(l);
    }
    return log_sinr_ok(rp, links, lp, twin, params.alpha, params.beta);
  });
  std::ostringstream os;
  os << certified << "/10 pairs certified (weakest " << weakest << "), bruteforce " << brute
     << ", bidirectional oracle " << model;
  return {pairs.size() == 5 && certified == 10 && brute == 5 && model == 5, os.str()};
}

Outcome c6_oblivious() {
  const SinrParams params{4.0, 1.0, 0.0};
  bool pass = true;
  std::ostringstream os;
  for (const auto& pf : {PowerFunction::mean(), PowerFunction::exponent((params.alpha + 2.0) / 2.0)}) {
    const PointSet pts = oblivious_lb_instance(6, pf, params);
    const auto links = line_mst_links(pts);
    int conflicts = 0;
    int total = 0;
    for (std::size_t i = 0; i < links.size(); ++i) {
      for (std::size_t j = i + 1; j < links.size(); ++j) {
        ++total;
        if (pairwise_oblivious_conflict(links[i], links[j], pf, params)) ++conflicts;
      }
    }
    const int brute = min_slots_bruteforce(links, params, PowerMode::oblivious(pf));
    const double tau = pf.exponent_for(params.alpha);
    const auto rp = raw_points(pts);
    const int model = oracle::min_partition(static_cast<int>(links.size()), [&](const std::vector<int>& block) {
      std::vector<oracle::L> b;
      std::vector<double> lp;
      std::vector<int> twin;
      for (int i : block) {
        const auto& l = links[static_cast<std::size_t>(i)];
        b.push_back({l.sender, l.receiver});
        lp.push_back(tau * std::log(oracle::length(rp, b.back())));
        twin.push_back(-1);
      }
      return log_sinr_ok(rp, b, lp, twin, params.alpha, params.beta);
    });
    pass = pass && conflicts == total && brute == 5 && model == 5;
    os << pf.name() << ": conflicts " << conflicts << "/" << total << ", bruteforce " << brute << ", oracle "
       << model << "; ";
  }
  return {pass, os.str()};
}

Outcome c7_discs() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int worst = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = gen_uniform(200, 1000 + seed);
    const Tree t = euclidean_mst(inst.points);
    std::vector<double> lengths;
    for (const auto& e : t.edges) lengths.push_back(inst.points.distance(e.u, e.v));
    for (int probe = 0; probe < 10000; ++probe) {
      const double len = lengths[static_cast<std::size_t>(unit(rng) * static_cast<double>(lengths.size()))];
      Vec2 center(unit(rng), unit(rng));
      if (probe % 2 == 0) {
        const PointId near = static_cast<PointId>(unit(rng) * inst.points.size());
        center = inst.points.position(near) + (len / 4.0) * Vec2(unit(rng) - 0.5, unit(rng) - 0.5);
      }
      worst = std::max(worst, long_edge_endpoints_in_disc(inst.points, t.edges, center, len / 4.0, len));
    }
  }
  std::ostringstream os;
  os << "max endpoints " << worst << " (limit " << kMaxDiscEndpoints << ")";
  return {worst <= kMaxDiscEndpoints, os.str()};
}

Outcome c8_annulus() {
  const double c1 = 0.25;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int misses = 0;
  double ratio = 0.0;
  for (int t = 1; t <= 10; ++t) {
    const auto centers = annulus_cover(t, c1);
    ratio = std::max(ratio, static_cast<double>(centers.size()) / t);
    for (int k = 0; k < 100000; ++k) {
      const double r = std::sqrt(t * t + unit(rng) * ((t + 1) * (t + 1) - t * t));
      const double th = 2 * std::numbers::pi * unit(rng);
      const Vec2 p(r * std::cos(th), r * std::sin(th));
      bool hit = false;
      for (const auto& c : centers) {
        if ((p - c).squaredNorm() <= c1 * c1) {
          hit = true;
          break;
        }
      }
      if (!hit) ++misses;
    }
  }
  std::ostringstream os;
  os << "misses " << misses << ", max centers/t " << ratio << " (K " << kAnnulusK << ")";
  return {misses == 0 && ratio <= kAnnulusK, os.str()};
}

Outcome c9_mlas() {
  const SinrParams params;
  bool pass = true;
  std::ostringstream os;
  for (int n : {64, 256}) {
    int lo = 1 << 30;
    int hi = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Instance inst = gen_uniform(n, seed);
      const AggregationSchedule a = mlas(inst.points, params);
      const AggregationReport r = verify_aggregation(a, n, params);
      const bool distinct_senders = [&] {
        std::set<PointId> s;
        for (const auto& l : a.tree) s.insert(l.sender);
        return s.size() == a.tree.size();
      }();
      pass = pass && r.pass() && distinct_senders && a.latency() >= std::ceil(std::log2(n)) &&
             a.latency() <= kMlasC * std::log2(n);
      lo = std::min(lo, a.latency());
      hi = std::max(hi, a.latency());
    }
    os << "n=" << n << " latency " << lo << ".." << hi << " (bounds " << std::ceil(std::log2(n)) << ", "
       << kMlasC * std::log2(n) << "); ";
  }
  return {pass, os.str()};
}

Outcome c10_logdelta() {
  const SinrParams params;
  bool pass = true;
  std::ostringstream os;
  auto check = [&](std::span<const Link> links, const char* label, bool report) {
    const ObliviousSchedule o = uniform_power_schedule(links, params);
    bool ok = o.diagnostics.empty() && o.schedule.link_count() == links.size();
    for (const auto& slot : o.schedule.slots) {
      ok = ok && is_feasible(slot.links, slot.powers, params).pass;
      for (const auto& l : slot.links) ok = ok && slot.powers.at(l) == slot.powers.at(slot.links.front());
    }
    const double bound = 8.0 * std::pow(4.0 * spacing_factor(params.alpha), 2.0) * o.diversity;
    ok = ok && static_cast<double>(o.schedule.slots.size()) <= bound;
    pass = pass && ok;
    if (report) os << label << " g=" << o.diversity << " slots " << o.schedule.slots.size() << "; ";
    return o.diversity;
  };
  std::vector<double> xs{0.0};
  for (int i = 0; i < 9; ++i) xs.push_back(xs.back() + std::pow(2.0, i));
  const int g = check(line_mst_links(PointSet::on_line(xs)), "chain", true);
  pass = pass && g == 9;
  for (std::uint64_t seed = 0; seed < 10; ++seed) check(mst_links(gen_uniform(200, seed).points), "random", seed == 0);
  os << "C=" << 8.0 * std::pow(4.0 * spacing_factor(params.alpha), 2.0);
  return {pass, os.str()};
}

Outcome c11_kedge() {
  const SinrParams params;
  bool pass = true;
  std::size_t max_slots = 0;
  for (int k : {1, 2}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Instance inst = gen_uniform(20, seed);
      const DesignResult d = k_edge_structure(inst.points, params, k);
      std::set<std::pair<int, int>> edges;
      std::size_t total = 0;
      for (const auto& t : d.trees) {
        for (const auto& e : t.edges) edges.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
        total += t.edges.size();
      }
      pass = pass && edges.size() == total && slots_feasible(d.schedule, params) &&
             verify_k_edge_strong(digraph_from_links(20, d.schedule.all_links()), k);
      max_slots = std::max(max_slots, d.schedule.slots.size());
    }
  }
  std::ostringstream os;
  os << "20 designs, max slots " << max_slots;
  return {pass, os.str()};
}

Outcome c12_biconnect() {
  const SinrParams params;
  bool pass = true;
  std::ostringstream os;
  for (int n : {10, 64}) {
    std::size_t worst = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const DesignResult d = biconnect_structure(gen_uniform(n, seed).points, params);
      pass = pass && slots_feasible(d.schedule, params) &&
             verify_bi_connectivity(digraph_from_links(n, d.schedule.all_links()));
      worst = std::max(worst, d.schedule.slots.size());
    }
    os << "n=" << n << " max slots " << worst << "; ";
  }
  return {pass, os.str()};
}

Outcome c13_coherence() {
  const SinrParams params;
  bool pass = true;
  int instances = 0;
  double worst = 0.0;
  for (int n = 2; n <= 7; ++n) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto links = mst_links(gen_uniform(n, 500 + seed).points);
      const int c = static_cast<int>(connect(links, params).slots.size());
      const int b = min_slots_bruteforce(links, params, PowerMode::recurrence());
      pass = pass && c >= b && c <= kOracleRatio * b;
      worst = std::max(worst, static_cast<double>(c) / b);
      ++instances;
    }
  }
  std::ostringstream os;
  os << instances << " instances, worst connect/optimum " << worst << " (limit " << kOracleRatio << ")";
  return {pass, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "one-slot soundness", 10, c1_soundness},
      {2, "connect logarithmic growth", 60, c2_growth},
      {3, "G1 partition number", 1, c3_g1},
      {4, "gadget recursion", 300, c4_g2},
      {5, "symmetric bidirectional lower bound", 10, c5_bidi},
      {6, "oblivious lower bound", 10, c6_oblivious},
      {7, "long-edge endpoints per disc", 60, c7_discs},
      {8, "annulus covering", 10, c8_annulus},
      {9, "aggregation latency", 60, c9_mlas},
      {10, "uniform power length classes", 10, c10_logdelta},
      {11, "k-edge connectivity", 30, c11_kedge},
      {12, "biconnectivity", 30, c12_biconnect},
      {13, "oracle coherence", 120, c13_coherence},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.budget_s;
    if (!pass) ++failed;
    std::printf("%s %2d %s: %s [%.2f s, budget %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs, c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
