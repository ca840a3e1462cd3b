#include "sinrconn/geometry.hpp"

#include "sinrconn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

namespace sinrconn {

PointSet::PointSet(Coords coords) : coords_(std::move(coords)) {
  if (!coords_.allFinite()) {
    throw PreconditionError("point coordinates must be finite");
  }
}

PointSet::PointSet(std::span<const Vec2> positions) : coords_(static_cast<Eigen::Index>(positions.size()), 2) {
  for (std::size_t i = 0; i < positions.size(); ++i) {
    coords_.row(static_cast<Eigen::Index>(i)) = positions[i].transpose();
  }
  if (!coords_.allFinite()) {
    throw PreconditionError("point coordinates must be finite");
  }
}

PointSet PointSet::on_line(std::span<const double> xs) {
  Coords c = Coords::Zero(static_cast<Eigen::Index>(xs.size()), 2);
  for (std::size_t i = 0; i < xs.size(); ++i) c(static_cast<Eigen::Index>(i), 0) = xs[i];
  return PointSet(std::move(c));
}

Point PointSet::point(PointId id) const {
  return Point{id, coords_(id, 0), coords_(id, 1)};
}

double PointSet::distance(PointId a, PointId b) const {
  return (coords_.row(a) - coords_.row(b)).norm();
}

PointSet PointSet::scaled(double factor) const { return PointSet(Coords(coords_ * factor)); }

double distance(const Point& p, const Point& q) { return distance(Vec2(p.x, p.y), Vec2(q.x, q.y)); }

double distance(const Vec2& p, const Vec2& q) { return (p - q).norm(); }

Link Link::reversed() const {
  return Link{receiver, sender, receiver_pos, sender_pos, length};
}

Link make_link(const PointSet& points, PointId sender, PointId receiver) {
  if (!points.contains(sender) || !points.contains(receiver)) {
    throw PreconditionError("link endpoint not in point set");
  }
  if (sender == receiver) {
    throw PreconditionError("link sender and receiver must differ");
  }
  Link l;
  l.sender = sender;
  l.receiver = receiver;
  l.sender_pos = points.position(sender);
  l.receiver_pos = points.position(receiver);
  l.length = distance(l.sender_pos, l.receiver_pos);
  return l;
}

bool link_less(const Link& a, const Link& b) {
  if (a.length != b.length) return a.length < b.length;
  if (a.sender != b.sender) return a.sender < b.sender;
  return a.receiver < b.receiver;
}

double link_distance(const Link& a, const Link& b) { return distance(a.sender_pos, b.receiver_pos); }

double symmetric_link_distance(const Link& a, const Link& b) {
  return std::min(link_distance(a, b), link_distance(b, a));
}

bool links_share_node(const Link& a, const Link& b) {
  return a.sender == b.sender || a.sender == b.receiver || a.receiver == b.sender ||
         a.receiver == b.receiver;
}

void sort_links(std::vector<Link>& links) { std::sort(links.begin(), links.end(), link_less); }

Edge make_edge(PointId a, PointId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool edge_less(const PointSet& points, const Edge& a, const Edge& b) {
  const double la = points.distance(a.u, a.v);
  const double lb = points.distance(b.u, b.v);
  if (la != lb) return la < lb;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

double total_length(const PointSet& points, std::span<const Edge> edges) {
  double sum = 0.0;
  for (const auto& e : edges) sum += points.distance(e.u, e.v);
  return sum;
}

Tree euclidean_mst(const PointSet& points) {
  std::vector<PointId> all(static_cast<std::size_t>(points.size()));
  for (PointId i = 0; i < points.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  return euclidean_mst(points, all);
}

Tree euclidean_mst(const PointSet& points, std::span<const PointId> subset) {
  if (subset.empty()) {
    throw PreconditionError("euclidean_mst needs at least one point");
  }
  const std::size_t n = subset.size();
  Tree tree;
  tree.edges.reserve(n - 1);
  std::vector<bool> in_tree(n, false);
  // best[i]: cheapest known edge from the tree to subset[i], under edge_less.
  std::vector<std::optional<Edge>> best(n);
  in_tree[0] = true;
  for (std::size_t j = 1; j < n; ++j) best[j] = make_edge(subset[0], subset[j]);
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      if (pick == n || edge_less(points, *best[j], *best[pick])) pick = j;
    }
    in_tree[pick] = true;
    tree.edges.push_back(*best[pick]);
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      const Edge cand = make_edge(subset[pick], subset[j]);
      if (edge_less(points, cand, *best[j])) best[j] = cand;
    }
  }
  return tree;
}

std::vector<Link> orient(const PointSet& points, const Tree& tree, PointId root, Direction direction) {
  if (!points.contains(root)) {
    throw PreconditionError("orientation root " + std::to_string(root) + " not in point set");
  }
  std::vector<std::vector<PointId>> adj(static_cast<std::size_t>(points.size()));
  bool root_seen = tree.edges.empty();
  for (const auto& e : tree.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    root_seen = root_seen || e.u == root || e.v == root;
  }
  if (!root_seen) {
    throw PreconditionError("orientation root " + std::to_string(root) + " not in tree");
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<Link> links;
  links.reserve(tree.edges.size());
  std::vector<bool> seen(static_cast<std::size_t>(points.size()), false);
  std::queue<PointId> frontier;
  frontier.push(root);
  seen[static_cast<std::size_t>(root)] = true;
  while (!frontier.empty()) {
    const PointId u = frontier.front();
    frontier.pop();
    for (PointId v : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = true;
      links.push_back(direction == Direction::toward ? make_link(points, v, u) : make_link(points, u, v));
      frontier.push(v);
    }
  }
  if (links.size() != tree.edges.size()) {
    throw PreconditionError("tree edges do not form a connected tree around the root");
  }
  return links;
}

std::vector<Link> nearest_neighbor_forest(const PointSet& points) {
  std::vector<PointId> all(static_cast<std::size_t>(points.size()));
  for (PointId i = 0; i < points.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  return nearest_neighbor_forest(points, all);
}

std::vector<Link> nearest_neighbor_forest(const PointSet& points, std::span<const PointId> active) {
  if (active.size() < 2) {
    throw PreconditionError("nearest_neighbor_forest needs at least two points");
  }
  std::vector<PointId> ids(active.begin(), active.end());
  std::sort(ids.begin(), ids.end());
  std::vector<PointId> nearest(static_cast<std::size_t>(points.size()), -1);
  for (PointId p : ids) {
    PointId best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (PointId q : ids) {
      if (q == p) continue;
      const double d = points.distance(p, q);
      if (d < best_d) {
        best_d = d;
        best = q;
      }
    }
    nearest[static_cast<std::size_t>(p)] = best;
  }
  std::vector<Link> forest;
  forest.reserve(ids.size());
  for (PointId p : ids) {
    const PointId q = nearest[static_cast<std::size_t>(p)];
    if (nearest[static_cast<std::size_t>(q)] == p && q < p) continue;
    forest.push_back(make_link(points, p, q));
  }
  return forest;
}

std::vector<Vec2> annulus_stage1_centers(int t) {
  if (t < 1) throw PreconditionError("annulus index t must be >= 1");
  const double radius = t + 0.5;
  const int count = static_cast<int>(std::ceil(4.0 * std::numbers::pi * radius));
  std::vector<Vec2> centers;
  centers.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / count;
    centers.emplace_back(radius * std::cos(theta), radius * std::sin(theta));
  }
  return centers;
}

namespace {

// Closest / farthest distance from `c` to the axis-aligned square.
double square_min_dist(const Vec2& lo, const Vec2& hi, const Vec2& c) {
  const Vec2 clamped = c.cwiseMax(lo).cwiseMin(hi);
  return (clamped - c).norm();
}

double square_max_dist(const Vec2& lo, const Vec2& hi, const Vec2& c) {
  const Vec2 far((c.x() - lo.x() > hi.x() - c.x()) ? lo.x() : hi.x(),
                 (c.y() - lo.y() > hi.y() - c.y()) ? lo.y() : hi.y());
  return (far - c).norm();
}

}  // namespace

std::vector<Vec2> annulus_cover(int t, double c1) {
  if (c1 <= 0.0) throw PreconditionError("cover radius must be positive");
  const double inner = t;
  const double outer = t + 1.0;
  int levels = 0;
  double side = 2.0;
  while (side * std::numbers::sqrt2 / 2.0 > c1) {
    side /= 2.0;
    ++levels;
  }
  const int cells = 1 << levels;
  const Vec2 origin = Vec2::Zero();

  std::vector<Vec2> centers;
  for (const Vec2& unit_center : annulus_stage1_centers(t)) {
    const Vec2 corner = unit_center - Vec2(1.0, 1.0);
    for (int i = 0; i < cells; ++i) {
      for (int j = 0; j < cells; ++j) {
        const Vec2 lo = corner + Vec2(i * side, j * side);
        const Vec2 hi = lo + Vec2(side, side);
        if (square_min_dist(lo, hi, unit_center) > 1.0) continue;
        if (square_min_dist(lo, hi, origin) > outer) continue;
        if (square_max_dist(lo, hi, origin) < inner) continue;
        centers.push_back((lo + hi) / 2.0);
      }
    }
  }
  return centers;
}

int long_edge_endpoints_in_disc(const PointSet& points, std::span<const Edge> edges, const Vec2& center,
                                double radius, double min_length) {
  std::vector<char> marked(static_cast<std::size_t>(points.size()), 0);
  for (const auto& e : edges) {
    if (points.distance(e.u, e.v) < min_length) continue;
    marked[static_cast<std::size_t>(e.u)] = 1;
    marked[static_cast<std::size_t>(e.v)] = 1;
  }
  int count = 0;
  for (PointId i = 0; i < points.size(); ++i) {
    if (marked[static_cast<std::size_t>(i)] && (points.position(i) - center).norm() <= radius) ++count;
  }
  return count;
}

}  // namespace sinrconn
