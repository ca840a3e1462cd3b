// Recomputes the empirical constants frozen in the tests.
#include "sinrconn/aggregation.hpp"
#include "sinrconn/instances.hpp"
#include "sinrconn/netdesign.hpp"
#include "sinrconn/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

using namespace sinrconn;

int main() {
  const SinrParams params;

  double max_score = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = gen_uniform(100, seed);
    const auto links = orient(inst.points, euclidean_mst(inst.points), 0, Direction::toward);
    for (const auto& probe : links) max_score = std::max(max_score, amenability_score(links, probe, params.alpha));
  }
  std::printf("mst amenability max score (n=100, 50 seeds): %.6f\n", max_score);

  for (int n : {64, 256, 1024}) {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Instance inst = gen_uniform(n, seed);
      const Schedule s = connect(orient(inst.points, euclidean_mst(inst.points), 0, Direction::toward), params);
      worst = std::max(worst, static_cast<double>(s.slots.size()) / std::log2(n));
    }
    std::printf("connect max slots/log2(n) at n=%d: %.4f\n", n, worst);
  }

  {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto [a, b] = strong_connect(gen_uniform(256, seed).points, params);
      worst = std::max(worst, static_cast<double>(a.slots.size() + b.slots.size()) / std::log2(256.0));
    }
    std::printf("strong_connect max slots/log2(n) at n=256: %.4f\n", worst);
  }

  for (int n : {64, 256}) {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const AggregationSchedule a = mlas(gen_uniform(n, seed).points, params);
      worst = std::max(worst, a.latency() / std::log2(n));
    }
    std::printf("mlas max latency/log2(n) at n=%d: %.4f\n", n, worst);
  }

  {
    double c3 = 0.0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Instance inst = gen_uniform(128, seed);
      const AggregationReport r = verify_aggregation(mlas(inst.points, params), inst.points.size(), params);
      c3 = std::max(c3, r.max_shrinkage);
    }
    std::printf("mlas max shrinkage (n=128, 50 seeds): %.6f\n", c3);
  }

  {
    double k_max = 0.0;
    for (int t = 1; t <= 10; ++t) k_max = std::max(k_max, static_cast<double>(annulus_cover(t, 0.25).size()) / t);
    std::printf("annulus cover max centers/t (c1=1/4, t<=10): %.4f\n", k_max);
  }

  {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double c = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Instance inst = gen_uniform(60, seed);
      const auto trees = edge_disjoint_spanning_trees(inst.points, 4);
      for (int i = 1; i < 4; ++i) {
        std::vector<double> lengths;
        for (const auto& e : trees[i].edges) lengths.push_back(inst.points.distance(e.u, e.v));
        for (int probe = 0; probe < 2000; ++probe) {
          const double len = lengths[static_cast<std::size_t>(unit(rng) * lengths.size())];
          const Vec2 center(unit(rng), unit(rng));
          const int cnt = long_edge_endpoints_in_disc(inst.points, trees[i].edges, center, len / 4.0, len);
          c = std::max(c, cnt / std::pow(i, 3.0));
        }
      }
    }
    std::printf("T_i long-edge endpoints per disc / i^3 (n=60, i=1..3): %.4f\n", c);
  }

  for (int k = 0; k <= 3; ++k) {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Instance inst = gen_uniform(40, seed);
      const double base = connect(orient(inst.points, euclidean_mst(inst.points), 0, Direction::toward), params)
                              .slots.size();
      const double slots = k == 0 ? base : k_edge_structure(inst.points, params, k).schedule.slots.size();
      worst = std::max(worst, slots / base / std::pow(k + 1, 3.0));
    }
    std::printf("k_edge slots / connect slots / (k+1)^3 at k=%d (n=40): %.4f\n", k, worst);
  }

  {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Instance inst = gen_uniform(64, seed);
      const auto [a, b] = strong_connect(inst.points, params);
      const double bi = biconnect_structure(inst.points, params).schedule.slots.size();
      worst = std::max(worst, bi / static_cast<double>(a.slots.size() + b.slots.size()));
    }
    std::printf("biconnect slots / strong_connect slots (n=64): %.4f\n", worst);
  }
  return 0;
}
