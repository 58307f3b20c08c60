#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "extfair/instance.hpp"
#include "extfair/transform.hpp"

namespace extfair {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema2D = "extfair/instance-2d/1";
inline constexpr const char* kSchema1D = "extfair/instance-1d/1";
inline constexpr const char* kSchemaFull = "extfair/instance-full/1";
inline constexpr const char* kSchemaAlloc = "extfair/alloc/1";

// All numeric fields are JSON strings in canonical p/q form; inputs may also
// use exact decimals ("0.25"). Parsing is exact or it throws Errc::Parse.
Json to_json(const Instance2D& instance);
Json to_json(const Instance1D& instance);
Json to_json(const FullInstance& instance);
Json to_json(const Allocation& alloc);
// 1-D document with the per-agent shift vector attached.
Json to_json(const TransformResult& result, const std::vector<std::string>& item_ids);

Instance2D instance_2d_from_json(const Json& doc);
Instance1D instance_1d_from_json(const Json& doc);
FullInstance instance_full_from_json(const Json& doc);
Allocation allocation_from_json(const Json& doc);

using AnyInstance = std::variant<Instance2D, Instance1D, FullInstance>;
AnyInstance instance_from_json(const Json& doc);  // dispatches on "schema"

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);
std::string dump_json(const Json& doc);  // stable 2-space indent + newline

}  // namespace extfair
