#pragma once

#include "sinrconn/geometry.hpp"
#include "sinrconn/sinr.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sinrconn {

struct Instance {
  PointSet points;
  SinrParams params;
  nlohmann::json metadata = nlohmann::json::object();  // generator name, seed, construction parameters
};

// Uniform points in [0, side)^2. Coordinates come from std::mt19937_64 seeded
// with `seed`, each draw mapped to [0, 1) as (word >> 11) * 2^-53, x before y.
Instance gen_uniform(int n, std::uint64_t seed, double side = 1.0, const SinrParams& params = {});

// n points on a row-major square grid with ceil(sqrt(n)) columns.
Instance gen_grid(int n, double spacing = 1.0, const SinrParams& params = {});

using Rational = boost::multiprecision::cpp_rational;

// Points on a line, strictly increasing, held exactly.
struct Gadget {
  std::vector<Rational> xs;

  [[nodiscard]] std::size_t size() const { return xs.size(); }
  [[nodiscard]] Rational diameter() const;
  [[nodiscard]] Rational min_gap() const;
  [[nodiscard]] std::vector<double> to_doubles() const;
};

Gadget gadget_g1();

// Translates g so its leftmost point lands on f's rightmost point; the shared
// point is kept once.
Gadget gadget_join(const Gadget& f, const Gadget& g);
Gadget gadget_scale(const Gadget& g, const Rational& factor);
Gadget gadget_translate(const Gadget& g, const Rational& offset);

// min over MST links of len^alpha / dhat^alpha, dhat the larger distance of the
// link's endpoints to the leftmost point.
double rho(const Gadget& g, double alpha);

struct GadgetOptions {
  // Exponent e in I(t) = ceil(8^e / (gamma * rho(G_{t-1}))); alpha when unset.
  std::optional<double> copy_exponent;
  // Materialize at most this many copies per level. When I(t) is larger and
  // this is unset, gadget_gt throws.
  std::optional<int> max_copies;
};

inline constexpr int kGadgetMaxLevel = 3;

struct GadgetBuild {
  Gadget gadget;
  int level = 1;
  double full_copies = 1.0;  // I(t) for the top level
  int copies = 1;            // copies actually joined at the top level
  bool truncated = false;    // some level used fewer than I(t) copies
  Rational leftmost_gap = 0; // B(t)
};

double gadget_copy_count(int t, const Gadget& previous, const SinrParams& params, const GadgetOptions& options = {});

// Recursive gadget G_t; G_1 is the base gadget. A truncated build keeps only
// the first copies; its f-values equal those of the matching links of the
// full gadget because the leading link stays the unique longest.
GadgetBuild gadget_gt(int t, const SinrParams& params, const GadgetOptions& options = {});

enum class LineOrientation { left_to_right, right_to_left };

// Consecutive-neighbor MST links of a line point set.
std::vector<Link> line_mst_links(const PointSet& points, LineOrientation orientation = LineOrientation::left_to_right);

inline constexpr int kPartitionMaxLinks = 12;

// Minimum number of parts such that each part satisfies the Kesselheim
// condition with gamma. Exhaustive; at most kPartitionMaxLinks links.
int partition_number(std::span<const Link> links, double gamma_value, double alpha);

}  // namespace sinrconn
