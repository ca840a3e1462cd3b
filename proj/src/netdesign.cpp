#include "sinrconn/netdesign.hpp"

#include "sinrconn/errors.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace sinrconn {

Digraph digraph_from_links(int n, std::span<const Link> links) {
  Digraph g{n, {}};
  g.arcs.reserve(links.size());
  for (const auto& l : links) g.arcs.emplace_back(l.sender, l.receiver);
  return g;
}

namespace {

std::vector<bool> reachable(const Digraph& g, PointId start, bool reverse, PointId removed) {
  std::vector<std::vector<PointId>> adj(static_cast<std::size_t>(g.n));
  for (const auto& [u, v] : g.arcs) {
    if (u == removed || v == removed) continue;
    if (reverse) {
      adj[static_cast<std::size_t>(v)].push_back(u);
    } else {
      adj[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
  std::queue<PointId> q;
  q.push(start);
  seen[static_cast<std::size_t>(start)] = true;
  while (!q.empty()) {
    const PointId u = q.front();
    q.pop();
    for (PointId v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = true;
        q.push(v);
      }
    }
  }
  return seen;
}

bool strongly_connected_without(const Digraph& g, PointId removed) {
  PointId start = 0;
  while (start == removed) ++start;
  if (start >= g.n) return true;
  const auto fwd = reachable(g, start, false, removed);
  const auto bwd = reachable(g, start, true, removed);
  for (PointId v = 0; v < g.n; ++v) {
    if (v == removed) continue;
    if (!fwd[static_cast<std::size_t>(v)] || !bwd[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

void check_arcs(const Digraph& g) {
  for (const auto& [u, v] : g.arcs) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) throw PreconditionError("arc endpoint outside digraph");
  }
}

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;

FlowGraph build_flow_graph(const Digraph& g) {
  FlowGraph fg(static_cast<std::size_t>(g.n));
  auto capacity = boost::get(boost::edge_capacity, fg);
  auto rev = boost::get(boost::edge_reverse, fg);
  for (const auto& [u, v] : g.arcs) {
    if (u == v) continue;
    auto e = boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), fg).first;
    auto r = boost::add_edge(static_cast<std::size_t>(v), static_cast<std::size_t>(u), fg).first;
    capacity[e] = 1;
    capacity[r] = 0;
    rev[e] = r;
    rev[r] = e;
  }
  return fg;
}

}  // namespace

bool verify_strong_connectivity(const Digraph& g) {
  check_arcs(g);
  if (g.n <= 1) return true;
  return strongly_connected_without(g, -1);
}

bool verify_k_edge_strong(const Digraph& g, int k) {
  check_arcs(g);
  if (k <= 0 || g.n <= 1) return true;
  FlowGraph fg = build_flow_graph(g);
  for (PointId v = 1; v < g.n; ++v) {
    for (int dir = 0; dir < 2; ++dir) {
      const auto s = static_cast<std::size_t>(dir == 0 ? 0 : v);
      const auto t = static_cast<std::size_t>(dir == 0 ? v : 0);
      const long flow = boost::edmonds_karp_max_flow(fg, s, t);
      if (flow < k) return false;
    }
  }
  return true;
}

bool verify_bi_connectivity(const Digraph& g) {
  check_arcs(g);
  if (g.n <= 2) return true;
  if (!strongly_connected_without(g, -1)) return false;
  for (PointId v = 0; v < g.n; ++v) {
    if (!strongly_connected_without(g, v)) return false;
  }
  return true;
}

namespace {

std::vector<Link> both_directions(const PointSet& points, std::span<const Edge> edges) {
  std::vector<Link> links;
  links.reserve(2 * edges.size());
  for (const auto& e : edges) {
    links.push_back(make_link(points, e.u, e.v));
    links.push_back(make_link(points, e.v, e.u));
  }
  return links;
}

}  // namespace

DesignResult biconnect_structure(const PointSet& points, const SinrParams& params, const SchedulerConfig& config) {
  if (points.size() < 3) throw PreconditionError("biconnect_structure needs at least three points");
  DesignResult out;
  const Tree tree = euclidean_mst(points);
  std::vector<int> degree(static_cast<std::size_t>(points.size()), 0);
  for (const auto& e : tree.edges) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  std::vector<PointId> leaves;
  for (PointId p = 0; p < points.size(); ++p) {
    if (degree[static_cast<std::size_t>(p)] == 1) leaves.push_back(p);
  }
  out.trees.push_back(tree);
  Tree leaf_tree;
  if (leaves.size() >= 2) leaf_tree = euclidean_mst(points, leaves);
  out.trees.push_back(leaf_tree);

  std::set<std::pair<PointId, PointId>> seen;
  std::vector<Edge> edges;
  for (const auto& t : out.trees) {
    for (const auto& e : t.edges) {
      if (seen.insert({e.u, e.v}).second) edges.push_back(e);
    }
  }
  out.links = both_directions(points, edges);
  out.schedule = connect(out.links, params, config);
  out.schedule.source = "design/biconnect";
  return out;
}

std::vector<Tree> edge_disjoint_spanning_trees(const PointSet& points, int count) {
  const int n = points.size();
  if (n < 2) throw PreconditionError("spanning trees need at least two points");
  std::vector<Edge> all;
  all.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (PointId u = 0; u < n; ++u) {
    for (PointId v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  std::sort(all.begin(), all.end(), [&](const Edge& a, const Edge& b) { return edge_less(points, a, b); });

  std::set<std::pair<PointId, PointId>> used;
  std::vector<Tree> trees;
  for (int i = 0; i < count; ++i) {
    std::vector<PointId> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](PointId x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    Tree tree;
    for (const auto& e : all) {
      if (used.contains({e.u, e.v})) continue;
      const PointId a = find(e.u);
      const PointId b = find(e.v);
      if (a == b) continue;
      parent[static_cast<std::size_t>(a)] = b;
      tree.edges.push_back(e);
      if (static_cast<int>(tree.edges.size()) == n - 1) break;
    }
    if (static_cast<int>(tree.edges.size()) != n - 1) {
      throw PreconditionError("no spanning tree avoids the edges of the first " + std::to_string(i) + " trees");
    }
    for (const auto& e : tree.edges) used.insert({e.u, e.v});
    trees.push_back(std::move(tree));
  }
  return trees;
}

DesignResult k_edge_structure(const PointSet& points, const SinrParams& params, int k, const SchedulerConfig& config) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  if (k >= points.size() - 1) throw PreconditionError("k must be < n - 1");
  DesignResult out;
  out.trees = edge_disjoint_spanning_trees(points, k + 1);
  out.schedule.source = "design/kedge";
  for (const auto& tree : out.trees) {
    for (Direction dir : {Direction::toward, Direction::away}) {
      const auto links = orient(points, tree, 0, dir);
      out.links.insert(out.links.end(), links.begin(), links.end());
      auto part = connect(links, params, config);
      for (auto& s : part.slots) out.schedule.slots.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace sinrconn
