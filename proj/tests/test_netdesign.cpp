#include "sinrconn/errors.hpp"
#include "sinrconn/instances.hpp"
#include "sinrconn/netdesign.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

using namespace sinrconn;

namespace {

Digraph cycle(int n, bool both) {
  Digraph g{n, {}};
  for (int i = 0; i < n; ++i) {
    g.arcs.emplace_back(i, (i + 1) % n);
    if (both) g.arcs.emplace_back((i + 1) % n, i);
  }
  return g;
}

Digraph path(int n, bool both) {
  Digraph g{n, {}};
  for (int i = 0; i + 1 < n; ++i) {
    g.arcs.emplace_back(i, i + 1);
    if (both) g.arcs.emplace_back(i + 1, i);
  }
  return g;
}

}  // namespace

TEST_CASE("strong connectivity verifier") {
  CHECK(verify_strong_connectivity(Digraph{1, {}}));
  CHECK(verify_strong_connectivity(path(5, true)));
  CHECK_FALSE(verify_strong_connectivity(path(5, false)));
  CHECK(verify_strong_connectivity(cycle(5, false)));
}

TEST_CASE("k-edge verifier") {
  CHECK(verify_k_edge_strong(cycle(6, true), 1));
  CHECK(verify_k_edge_strong(cycle(6, true), 2));
  CHECK_FALSE(verify_k_edge_strong(cycle(6, true), 3));
  CHECK(verify_k_edge_strong(cycle(6, false), 1));
  CHECK_FALSE(verify_k_edge_strong(cycle(6, false), 2));
  CHECK_FALSE(verify_k_edge_strong(path(4, false), 1));
  CHECK(verify_k_edge_strong(path(4, true), 1));
  CHECK_FALSE(verify_k_edge_strong(path(4, true), 2));
}

TEST_CASE("k-edge verifier agrees with exhaustive arc deletion") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 3;
    Digraph g{n, {}};
    std::uniform_int_distribution<int> node(0, n - 1);
    const int arcs = 2 * n + trial % 5;
    while (static_cast<int>(g.arcs.size()) < arcs) {
      const int u = node(rng);
      const int v = node(rng);
      if (u != v) g.arcs.emplace_back(u, v);
    }
    for (int k = 1; k <= 2; ++k) {
      bool survives = verify_strong_connectivity(g);
      if (k == 2) {
        for (std::size_t drop = 0; drop < g.arcs.size() && survives; ++drop) {
          Digraph h{n, {}};
          for (std::size_t i = 0; i < g.arcs.size(); ++i) {
            if (i != drop) h.arcs.push_back(g.arcs[i]);
          }
          survives = verify_strong_connectivity(h);
        }
      }
      CHECK(verify_k_edge_strong(g, k) == survives);
    }
  }
}

TEST_CASE("bi-connectivity verifier") {
  CHECK(verify_bi_connectivity(cycle(3, true)));
  CHECK_FALSE(verify_bi_connectivity(path(4, true)));
  CHECK(verify_bi_connectivity(Digraph{2, {{0, 1}, {1, 0}}}));
}

TEST_CASE("biconnect structure") {
  const SinrParams params;
  const PointSet three = PointSet::on_line(std::vector<double>{0, 1, 3});
  const DesignResult d3 = biconnect_structure(three, params);
  std::set<LinkKey> arcs;
  for (const auto& l : d3.links) arcs.insert(l.key());
  CHECK(arcs == std::set<LinkKey>{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
  CHECK(verify_bi_connectivity(digraph_from_links(3, d3.links)));
  CHECK_THROWS_AS(biconnect_structure(PointSet::on_line(std::vector<double>{0, 1}), params), PreconditionError);

  for (int n : {10, 64}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Instance inst = gen_uniform(n, seed);
      const DesignResult d = biconnect_structure(inst.points, params);
      CHECK(verify_bi_connectivity(digraph_from_links(n, d.schedule.all_links())));
      for (const auto& slot : d.schedule.slots) CHECK(is_feasible(slot.links, slot.powers, params).pass);
      if (n == 64) {
        const auto [a, b] = strong_connect(inst.points, params);
        CHECK(d.schedule.slots.size() <= 2 * (a.slots.size() + b.slots.size()));
      }
    }
  }
}

TEST_CASE("edge-disjoint spanning trees") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = gen_uniform(20, seed);
    const auto trees = edge_disjoint_spanning_trees(inst.points, 4);
    std::set<std::pair<int, int>> all;
    std::size_t total = 0;
    for (const auto& t : trees) {
      CHECK(t.edges.size() == 19);
      for (const auto& e : t.edges) all.insert({e.u, e.v});
      total += t.edges.size();
    }
    CHECK(all.size() == total);
    CHECK(total_length(inst.points, trees[0].edges) ==
          doctest::Approx(total_length(inst.points, euclidean_mst(inst.points).edges)));
  }
  CHECK_THROWS_AS(edge_disjoint_spanning_trees(PointSet::on_line(std::vector<double>{0, 1, 2}), 2),
                  PreconditionError);
}

TEST_CASE("k-edge structure") {
  const SinrParams params;
  for (int k : {1, 2}) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Instance inst = gen_uniform(20, seed);
      const DesignResult d = k_edge_structure(inst.points, params, k);
      CHECK(d.trees.size() == static_cast<std::size_t>(k + 1));
      CHECK(verify_k_edge_strong(digraph_from_links(20, d.schedule.all_links()), k));
      for (const auto& slot : d.schedule.slots) CHECK(is_feasible(slot.links, slot.powers, params).pass);
    }
  }
  CHECK_THROWS_AS(k_edge_structure(gen_uniform(5, 0).points, params, 4), PreconditionError);
  CHECK_THROWS_AS(k_edge_structure(gen_uniform(5, 0).points, params, 0), PreconditionError);
}

TEST_CASE("k-edge slot growth shape") {
  // slots(k) / slots(connect) / (k+1)^3 measured at <= 1.0 for k <= 3 (n = 40, seeds 0..4).
  constexpr double kShapeC = 1.0;
  const SinrParams params;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = gen_uniform(40, seed);
    const double base =
        connect(orient(inst.points, euclidean_mst(inst.points), 0, Direction::toward), params).slots.size();
    for (int k = 1; k <= 3; ++k) {
      const double slots = k_edge_structure(inst.points, params, k).schedule.slots.size();
      CHECK(slots / base <= kShapeC * std::pow(k + 1, 3.0));
    }
  }
}

TEST_CASE("long edges of later trees stay sparse in small discs") {
  // max count / i^3 measured at 3 on this corpus.
  constexpr double kDiscC = 3.0;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = gen_uniform(60, seed);
    const auto trees = edge_disjoint_spanning_trees(inst.points, 4);
    for (int i = 1; i < 4; ++i) {
      std::vector<double> lengths;
      for (const auto& e : trees[static_cast<std::size_t>(i)].edges) lengths.push_back(inst.points.distance(e.u, e.v));
      for (int probe = 0; probe < 2000; ++probe) {
        const double len = lengths[static_cast<std::size_t>(unit(rng) * lengths.size())];
        const Vec2 center(unit(rng), unit(rng));
        const int cnt = long_edge_endpoints_in_disc(inst.points, trees[static_cast<std::size_t>(i)].edges, center,
                                                    len / 4.0, len);
        worst = std::max(worst, cnt / std::pow(i, 3.0));
      }
    }
  }
  CHECK(worst <= kDiscC);
}
