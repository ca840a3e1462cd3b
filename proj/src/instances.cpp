#include "sinrconn/instances.hpp"

#include "sinrconn/errors.hpp"
#include "sinrconn/subset_partition.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace sinrconn {

namespace {

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

Instance gen_uniform(int n, std::uint64_t seed, double side, const SinrParams& params) {
  if (n < 0) throw PreconditionError("n must be >= 0");
  if (!(side > 0.0)) throw PreconditionError("side must be positive");
  std::mt19937_64 rng(seed);
  PointSet::Coords coords(n, 2);
  for (int i = 0; i < n; ++i) {
    coords(i, 0) = side * unit_draw(rng);
    coords(i, 1) = side * unit_draw(rng);
  }
  Instance inst{PointSet(std::move(coords)), params, nlohmann::json::object()};
  inst.metadata = {{"generator", "uniform"}, {"n", n}, {"seed", seed}, {"side", side}};
  return inst;
}

Instance gen_grid(int n, double spacing, const SinrParams& params) {
  if (n < 0) throw PreconditionError("n must be >= 0");
  if (!(spacing > 0.0)) throw PreconditionError("spacing must be positive");
  const int cols = std::max(1, static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n)))));
  PointSet::Coords coords(n, 2);
  for (int i = 0; i < n; ++i) {
    coords(i, 0) = spacing * (i % cols);
    coords(i, 1) = spacing * (i / cols);
  }
  Instance inst{PointSet(std::move(coords)), params, nlohmann::json::object()};
  inst.metadata = {{"generator", "grid"}, {"n", n}, {"spacing", spacing}};
  return inst;
}

Rational Gadget::diameter() const { return xs.empty() ? Rational(0) : Rational(xs.back() - xs.front()); }

Rational Gadget::min_gap() const {
  if (xs.size() < 2) throw PreconditionError("gadget with fewer than two points has no gaps");
  Rational best = xs[1] - xs[0];
  for (std::size_t i = 2; i < xs.size(); ++i) best = std::min<Rational>(best, xs[i] - xs[i - 1]);
  return best;
}

std::vector<double> Gadget::to_doubles() const {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.convert_to<double>());
  return out;
}

Gadget gadget_g1() { return Gadget{{-28, 0, 2, 6, 14}}; }

Gadget gadget_translate(const Gadget& g, const Rational& offset) {
  Gadget out = g;
  for (auto& x : out.xs) x += offset;
  return out;
}

Gadget gadget_join(const Gadget& f, const Gadget& g) {
  if (f.xs.empty()) return g;
  if (g.xs.empty()) return f;
  Gadget out = f;
  const Rational shift = f.xs.back() - g.xs.front();
  for (std::size_t i = 1; i < g.xs.size(); ++i) out.xs.push_back(g.xs[i] + shift);
  return out;
}

Gadget gadget_scale(const Gadget& g, const Rational& factor) {
  if (factor <= 0) throw PreconditionError("gadget scale factor must be positive");
  Gadget out = g;
  for (auto& x : out.xs) x *= factor;
  return out;
}

double rho(const Gadget& g, double alpha) {
  if (g.xs.size() < 2) throw PreconditionError("rho needs at least one link");
  const Rational left = g.xs.front();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < g.xs.size(); ++i) {
    const Rational len = g.xs[i] - g.xs[i - 1];
    const Rational dhat = g.xs[i] - left;
    const double ratio = Rational(len / dhat).convert_to<double>();
    best = std::min(best, std::pow(ratio, alpha));
  }
  return best;
}

double gadget_copy_count(int /*t*/, const Gadget& previous, const SinrParams& params, const GadgetOptions& options) {
  const double e = options.copy_exponent.value_or(params.alpha);
  return std::ceil(std::pow(8.0, e) / (gamma(params) * rho(previous, params.alpha)));
}

GadgetBuild gadget_gt(int t, const SinrParams& params, const GadgetOptions& options) {
  params.validate();
  if (t < 1 || t > kGadgetMaxLevel) {
    throw PreconditionError("gadget level t must be in [1, " + std::to_string(kGadgetMaxLevel) + "]");
  }
  GadgetBuild build;
  build.gadget = gadget_g1();
  build.leftmost_gap = build.gadget.xs[1] - build.gadget.xs[0];
  for (int level = 2; level <= t; ++level) {
    const Gadget prev = build.gadget;
    const double full = gadget_copy_count(level, prev, params, options);
    int copies = 0;
    if (options.max_copies && full > *options.max_copies) {
      copies = *options.max_copies;
      build.truncated = true;
    } else if (full > 1e6) {
      throw PreconditionError("G_" + std::to_string(level) + " needs " + std::to_string(full) +
                              " copies; set max_copies to build a truncated prefix");
    } else {
      copies = static_cast<int>(full);
    }
    if (copies < 1) throw PreconditionError("gadget needs at least one copy per level");

    const Rational prev_min = prev.min_gap();
    Gadget acc = gadget_translate(prev, -prev.xs.front());
    for (int j = 2; j <= copies; ++j) {
      const Rational h = 2 * acc.diameter() / prev_min;
      acc = gadget_join(acc, gadget_scale(prev, h));
    }
    const Rational b = 4 * acc.diameter();
    Gadget next;
    next.xs.reserve(acc.xs.size() + 1);
    next.xs.push_back(-b);
    next.xs.insert(next.xs.end(), acc.xs.begin(), acc.xs.end());
    build.gadget = std::move(next);
    build.level = level;
    build.full_copies = full;
    build.copies = copies;
    build.leftmost_gap = b;
  }
  return build;
}

std::vector<Link> line_mst_links(const PointSet& points, LineOrientation orientation) {
  std::vector<PointId> order(static_cast<std::size_t>(points.size()));
  for (PointId i = 0; i < points.size(); ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    return points.position(a).x() < points.position(b).x();
  });
  std::vector<Link> links;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (orientation == LineOrientation::left_to_right) {
      links.push_back(make_link(points, order[i - 1], order[i]));
    } else {
      links.push_back(make_link(points, order[i], order[i - 1]));
    }
  }
  return links;
}

int partition_number(std::span<const Link> links, double gamma_value, double alpha) {
  const int n = static_cast<int>(links.size());
  if (n > kPartitionMaxLinks) {
    throw PreconditionError("partition_number accepts at most " + std::to_string(kPartitionMaxLinks) + " links");
  }
  auto admissible = [&](std::uint32_t mask) {
    std::vector<Link> block;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) block.push_back(links[static_cast<std::size_t>(i)]);
    }
    return satisfies_kesselheim(block, gamma_value, alpha);
  };
  const auto result = min_subset_partition(n, admissible, kPartitionMaxLinks);
  if (!result) throw InternalError("singleton parts always satisfy the Kesselheim condition");
  return result->blocks;
}

}  // namespace sinrconn
