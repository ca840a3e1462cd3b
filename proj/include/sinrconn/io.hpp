#pragma once

#include "sinrconn/aggregation.hpp"
#include "sinrconn/instances.hpp"
#include "sinrconn/scheduler.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace sinrconn {

inline constexpr int kFormatVersion = 1;

// Instance:  {version, params:{alpha,beta,noise}, points:[{id,x,y}], metadata}
// Schedule:  {version, kind:"schedule", model, source, slots:[{links:[{s,r}], powers:[{s,r,p}]}]}
// Aggregation: schedule layout with kind:"aggregation" and sink.
// Doubles are written in shortest round-trip form, so reads are bit-exact.
nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& doc);

nlohmann::json schedule_to_json(const Schedule& schedule);
Schedule schedule_from_json(const nlohmann::json& doc, const PointSet& points);

nlohmann::json aggregation_to_json(const AggregationSchedule& schedule);
AggregationSchedule aggregation_from_json(const nlohmann::json& doc, const PointSet& points);

nlohmann::json tree_to_json(const PointSet& points, const Tree& tree);

nlohmann::json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const nlohmann::json& doc);

void save_instance(const std::filesystem::path& path, const Instance& instance);
Instance load_instance(const std::filesystem::path& path);

// slot,links,min_sinr_margin per slot (margin = min SINR / beta).
std::string slot_stats_csv(const Schedule& schedule, const SinrParams& params);

}  // namespace sinrconn
