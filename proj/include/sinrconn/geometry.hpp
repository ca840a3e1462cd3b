#pragma once

#include <Eigen/Core>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sinrconn {

using PointId = int;
using Vec2 = Eigen::Vector2d;

struct Point {
  PointId id = 0;
  double x = 0.0;
  double y = 0.0;
};

// Planar point set. Ids are the dense row indices 0..n-1 of the coordinate
// matrix.
class PointSet {
 public:
  using Coords = Eigen::Matrix<double, Eigen::Dynamic, 2, Eigen::RowMajor>;

  PointSet() = default;
  explicit PointSet(Coords coords);
  explicit PointSet(std::span<const Vec2> positions);

  static PointSet on_line(std::span<const double> xs);

  [[nodiscard]] int size() const { return static_cast<int>(coords_.rows()); }
  [[nodiscard]] bool empty() const { return coords_.rows() == 0; }
  [[nodiscard]] Vec2 position(PointId id) const { return coords_.row(id).transpose(); }
  [[nodiscard]] Point point(PointId id) const;
  [[nodiscard]] double distance(PointId a, PointId b) const;
  [[nodiscard]] const Coords& coords() const { return coords_; }
  [[nodiscard]] bool contains(PointId id) const { return id >= 0 && id < size(); }

  // Uniformly scaled copy; used by scale-invariance checks.
  [[nodiscard]] PointSet scaled(double factor) const;

 private:
  Coords coords_;
};

double distance(const Point& p, const Point& q);
double distance(const Vec2& p, const Vec2& q);

// Directed link sender -> receiver. Endpoint positions are carried along so
// that link-level geometry does not need the owning point set.
struct Link {
  PointId sender = 0;
  PointId receiver = 0;
  Vec2 sender_pos = Vec2::Zero();
  Vec2 receiver_pos = Vec2::Zero();
  double length = 0.0;

  [[nodiscard]] Link reversed() const;
  [[nodiscard]] std::pair<PointId, PointId> key() const { return {sender, receiver}; }
  friend bool operator==(const Link& a, const Link& b) {
    return a.sender == b.sender && a.receiver == b.receiver;
  }
};

using LinkKey = std::pair<PointId, PointId>;

Link make_link(const PointSet& points, PointId sender, PointId receiver);

// Global strict order on links: by length, then (sender, receiver).
bool link_less(const Link& a, const Link& b);

// d_{ab}: distance from a's sender to b's receiver.
double link_distance(const Link& a, const Link& b);
// min(d_{ab}, d_{ba}).
double symmetric_link_distance(const Link& a, const Link& b);

bool links_share_node(const Link& a, const Link& b);

void sort_links(std::vector<Link>& links);

struct Edge {
  PointId u = 0;
  PointId v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Normalized so that u < v.
Edge make_edge(PointId a, PointId b);

// Strict order on undirected edges: length, then (min id, max id).
bool edge_less(const PointSet& points, const Edge& a, const Edge& b);

enum class Orientation { unoriented, toward_root, away_from_root };
enum class Direction { toward, away };

struct Tree {
  std::vector<Edge> edges;
  std::optional<PointId> root;
  Orientation orientation = Orientation::unoriented;
};

double total_length(const PointSet& points, std::span<const Edge> edges);

// Minimum spanning tree of the complete Euclidean graph (Prim, O(n^2)).
// Ties are resolved by edge_less, which makes the tree unique.
Tree euclidean_mst(const PointSet& points);
// Same, restricted to a subset of the points.
Tree euclidean_mst(const PointSet& points, std::span<const PointId> subset);

std::vector<Link> orient(const PointSet& points, const Tree& tree, PointId root, Direction direction);

// Each point links to its nearest other point (smallest id on ties); of an
// antiparallel pair only the link whose sender has the smaller id survives.
std::vector<Link> nearest_neighbor_forest(const PointSet& points);
std::vector<Link> nearest_neighbor_forest(const PointSet& points, std::span<const PointId> active);

// Unit-disc centers on the radius-(t + 0.5) circle covering the annulus
// between radii t and t + 1 around the origin.
std::vector<Vec2> annulus_stage1_centers(int t);

// Radius-c1 disc centers covering the same annulus. Each unit disc is refined
// by repeatedly halving a bounding square until its half-diagonal is <= c1.
std::vector<Vec2> annulus_cover(int t, double c1);

// Number of distinct points inside the closed disc (center, radius) that are
// incident to an edge of length >= min_length.
int long_edge_endpoints_in_disc(const PointSet& points, std::span<const Edge> edges, const Vec2& center,
                                double radius, double min_length);

}  // namespace sinrconn
