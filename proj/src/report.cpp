#include "birk/report.hpp"

#include <nlohmann/json.hpp>

#include "birk/matrix_io.hpp"

namespace birk {

nlohmann::ordered_json make_envelope(const std::string& command,
                                     const std::string& input_digest,
                                     nlohmann::ordered_json payload) {
    nlohmann::ordered_json envelope;
    envelope["command"] = command;
    envelope["schema_version"] = kReportSchemaVersion;
    envelope["input_digest"] = input_digest;
    envelope["payload"] = std::move(payload);
    return envelope;
}

namespace {

void emit(const nlohmann::ordered_json& j, std::string& out) {
    using value_t = nlohmann::ordered_json::value_t;
    switch (j.type()) {
        case value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::ordered_json(key).dump();
                out += ':';
                emit(value, out);
            }
            out += '}';
            break;
        }
        case value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& value : j) {
                if (!first) out += ',';
                first = false;
                emit(value, out);
            }
            out += ']';
            break;
        }
        case value_t::number_float:
            out += format_real(j.get<double>());
            break;
        default:
            // strings (escaped), integers, booleans, null
            out += j.dump();
            break;
    }
}

}  // namespace

std::string dump_report(const nlohmann::ordered_json& j) {
    std::string out;
    emit(j, out);
    return out;
}

}  // namespace birk
