#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace nckg::output {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

/// 17 significant digits via std::to_chars (locale independent, correctly
/// rounded). Non-finite values render as "null".
std::string format_double(double v);

/// JSON text with insertion-ordered keys and every float through
/// format_double; byte-identical for identical input.
std::string dump_json(const Json& j, int indent = 2);

/// Flat table: header line then one line per row; cells that are null
/// render empty, strings are quoted only when needed.
std::string to_csv(const std::vector<std::string>& header, const Json& rows,
                   const std::vector<std::string>& comments = {});

}  // namespace nckg::output
