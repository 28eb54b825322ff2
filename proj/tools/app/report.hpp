#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "kfin/group.hpp"
#include "kfin/growth.hpp"
#include "kfin/torsion.hpp"
#include "kfin/trace.hpp"

namespace kfin::app {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "kfin-report/1";

struct RunOptions {
  GroupOptions group;
  std::uint32_t radius = 12;
  FfinMethod method = FfinMethod::Auto;
};

/// Parameters that change a report's content; part of the cache key.
Json run_parameters(const RunOptions& options);

Json report_header(const std::string& command, const Group& group);
Json to_json(const GpolVerdict& verdict);
Json to_json(const DegreeFit& fit);
Json to_json(const PolyFullVerdict& verdict);
std::string to_string(ClassMembership membership);

Json run_ffin(const std::string& spec, const RunOptions& options);
Json run_growth(const std::string& spec, const std::string& element, const RunOptions& options);
Json run_trace_matrix(const std::string& spec, const RunOptions& options);

/// Delimited-text rendering of any report produced by this layer.
std::string render_table(const Json& report);

}  // namespace kfin::app
