#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

namespace birk {

inline constexpr const char* kReportSchemaVersion = "1";

/// Assembles the versioned report envelope:
/// {command, schema_version, input_digest, payload}.
nlohmann::ordered_json make_envelope(const std::string& command,
                                     const std::string& input_digest,
                                     nlohmann::ordered_json payload);

/// Compact single-line serialization with every real emitted at 17
/// significant digits via format_real. Key order is insertion order, so a
/// given envelope always serializes to identical bytes.
std::string dump_report(const nlohmann::ordered_json& j);

}  // namespace birk
