#include "sinrconn/io.hpp"

#include "sinrconn/bidirectional.hpp"
#include "sinrconn/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sinrconn {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key, json::value_t type) {
  if (!doc.is_object() || !doc.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  const json& v = doc.at(key);
  const bool ok = type == json::value_t::number_float ? v.is_number() : v.type() == type ||
                  (type == json::value_t::number_integer && v.is_number_unsigned());
  if (!ok) throw SchemaError(std::string("field '") + key + "' has the wrong type");
  return v;
}

double number(const json& doc, const char* key) { return require(doc, key, json::value_t::number_float).get<double>(); }

PointId point_id(const json& doc, const char* key, const PointSet& points) {
  const auto id = require(doc, key, json::value_t::number_integer).get<long long>();
  if (id < 0 || id >= points.size()) throw SchemaError("point id " + std::to_string(id) + " out of range");
  return static_cast<PointId>(id);
}

void check_version(const json& doc) {
  if (require(doc, "version", json::value_t::number_integer).get<int>() != kFormatVersion) {
    throw SchemaError("unsupported format version");
  }
}

std::string model_name(LinkModel m) { return m == LinkModel::bidirectional ? "bidirectional" : "unidirectional"; }

json slots_to_json(const std::vector<Slot>& slots) {
  json out = json::array();
  for (const auto& slot : slots) {
    json links = json::array();
    json powers = json::array();
    for (const auto& l : slot.links) {
      links.push_back({{"s", l.sender}, {"r", l.receiver}});
      if (slot.powers.contains(l)) powers.push_back({{"s", l.sender}, {"r", l.receiver}, {"p", slot.powers.at(l)}});
    }
    out.push_back({{"links", links}, {"powers", powers}});
  }
  return out;
}

std::vector<Slot> slots_from_json(const json& doc, const PointSet& points) {
  std::vector<Slot> slots;
  for (const auto& s : require(doc, "slots", json::value_t::array)) {
    Slot slot;
    for (const auto& l : require(s, "links", json::value_t::array)) {
      const PointId a = point_id(l, "s", points);
      const PointId b = point_id(l, "r", points);
      if (a == b) throw SchemaError("link with identical endpoints");
      slot.links.push_back(make_link(points, a, b));
    }
    for (const auto& p : require(s, "powers", json::value_t::array)) {
      const double value = number(p, "p");
      if (!(value > 0.0) || !std::isfinite(value)) throw SchemaError("power must be positive and finite");
      slot.powers.set(LinkKey{point_id(p, "s", points), point_id(p, "r", points)}, value);
    }
    slots.push_back(std::move(slot));
  }
  return slots;
}

}  // namespace

json instance_to_json(const Instance& instance) {
  json points = json::array();
  for (PointId i = 0; i < instance.points.size(); ++i) {
    const Point p = instance.points.point(i);
    points.push_back({{"id", p.id}, {"x", p.x}, {"y", p.y}});
  }
  return {{"version", kFormatVersion},
          {"params", {{"alpha", instance.params.alpha}, {"beta", instance.params.beta}, {"noise", instance.params.noise}}},
          {"points", points},
          {"metadata", instance.metadata}};
}

Instance instance_from_json(const json& doc) {
  check_version(doc);
  Instance inst;
  const json& params = require(doc, "params", json::value_t::object);
  inst.params = SinrParams{number(params, "alpha"), number(params, "beta"), number(params, "noise")};
  const json& pts = require(doc, "points", json::value_t::array);
  const auto n = static_cast<Eigen::Index>(pts.size());
  PointSet::Coords coords(n, 2);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& p : pts) {
    const auto id = require(p, "id", json::value_t::number_integer).get<long long>();
    if (id < 0 || id >= n || seen[static_cast<std::size_t>(id)]) {
      throw SchemaError("point ids must be 0..n-1, each exactly once");
    }
    seen[static_cast<std::size_t>(id)] = true;
    coords(id, 0) = number(p, "x");
    coords(id, 1) = number(p, "y");
  }
  if (!coords.allFinite()) throw SchemaError("point coordinates must be finite");
  inst.points = PointSet(std::move(coords));
  if (doc.contains("metadata")) inst.metadata = doc.at("metadata");
  return inst;
}

json schedule_to_json(const Schedule& schedule) {
  return {{"version", kFormatVersion},
          {"kind", "schedule"},
          {"model", model_name(schedule.model)},
          {"source", schedule.source},
          {"slots", slots_to_json(schedule.slots)}};
}

Schedule schedule_from_json(const json& doc, const PointSet& points) {
  check_version(doc);
  if (doc.contains("kind") && doc.at("kind") != "schedule") throw SchemaError("document is not a schedule");
  Schedule s;
  const std::string model = doc.value("model", "unidirectional");
  if (model == "bidirectional") {
    s.model = LinkModel::bidirectional;
  } else if (model != "unidirectional") {
    throw SchemaError("unknown link model '" + model + "'");
  }
  s.source = doc.value("source", "");
  s.slots = slots_from_json(doc, points);
  return s;
}

json aggregation_to_json(const AggregationSchedule& schedule) {
  return {{"version", kFormatVersion},
          {"kind", "aggregation"},
          {"sink", schedule.sink},
          {"active_sizes", schedule.active_sizes},
          {"slots", slots_to_json(schedule.slots)}};
}

AggregationSchedule aggregation_from_json(const json& doc, const PointSet& points) {
  check_version(doc);
  if (require(doc, "kind", json::value_t::string) != "aggregation") {
    throw SchemaError("document is not an aggregation schedule");
  }
  AggregationSchedule s;
  s.sink = point_id(doc, "sink", points);
  s.slots = slots_from_json(doc, points);
  for (const auto& slot : s.slots) s.tree.insert(s.tree.end(), slot.links.begin(), slot.links.end());
  if (doc.contains("active_sizes")) s.active_sizes = doc.at("active_sizes").get<std::vector<int>>();
  return s;
}

json tree_to_json(const PointSet& points, const Tree& tree) {
  json edges = json::array();
  for (const auto& e : tree.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"length", points.distance(e.u, e.v)}});
  return {{"version", kFormatVersion},
          {"kind", "tree"},
          {"edges", edges},
          {"total_length", total_length(points, tree.edges)}};
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void save_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("failed writing " + path.string());
}

void save_instance(const std::filesystem::path& path, const Instance& instance) {
  save_json(path, instance_to_json(instance));
}

Instance load_instance(const std::filesystem::path& path) { return instance_from_json(load_json(path)); }

std::string slot_stats_csv(const Schedule& schedule, const SinrParams& params) {
  std::ostringstream os;
  os.precision(17);
  os << "slot,links,min_sinr_margin\n";
  for (std::size_t i = 0; i < schedule.slots.size(); ++i) {
    const Slot& slot = schedule.slots[i];
    const FeasibilityReport r = schedule.model == LinkModel::bidirectional
                                    ? bidi_feasible(pairs_from_slot(slot), params)
                                    : is_feasible(slot.links, slot.powers, params);
    os << i << ',' << slot.links.size() << ',' << r.min_margin << '\n';
  }
  return os.str();
}

}  // namespace sinrconn
