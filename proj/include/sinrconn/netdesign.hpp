#pragma once

#include "sinrconn/geometry.hpp"
#include "sinrconn/scheduler.hpp"
#include "sinrconn/sinr.hpp"

#include <span>
#include <utility>
#include <vector>

namespace sinrconn {

struct Digraph {
  int n = 0;
  std::vector<std::pair<PointId, PointId>> arcs;  // parallel arcs allowed
};

Digraph digraph_from_links(int n, std::span<const Link> links);

// Reachability from and to node 0.
bool verify_strong_connectivity(const Digraph& g);

// Every directed min cut between node 0 and every other node, in both
// directions, has at least k arcs (unit capacities, max-flow).
bool verify_k_edge_strong(const Digraph& g, int k);

// Strong connectivity survives the deletion of any single vertex.
bool verify_bi_connectivity(const Digraph& g);

struct DesignResult {
  std::vector<Tree> trees;
  std::vector<Link> links;
  Schedule schedule;
};

// MST T plus the MST T' of T's leaves, both directions of every edge,
// scheduled together by connect.
DesignResult biconnect_structure(const PointSet& points, const SinrParams& params, const SchedulerConfig& config = {});

// `count` pairwise edge-disjoint spanning trees: T_0 is the MST and T_i the
// minimum spanning tree avoiding the edges of T_0..T_{i-1} (Kruskal, ties by
// edge_less). Throws PreconditionError if the remaining graph disconnects.
std::vector<Tree> edge_disjoint_spanning_trees(const PointSet& points, int count);

// T_0..T_k, each scheduled toward and away from point 0 by connect.
DesignResult k_edge_structure(const PointSet& points, const SinrParams& params, int k,
                              const SchedulerConfig& config = {});

}  // namespace sinrconn
