#pragma once

#include <string>
#include <vector>

#include "darbouxkit/serialize.hpp"

namespace darbouxkit {

// Every command returns {"command", "result", "checks": [report...], "pass"}.
// Errors propagate as darbouxkit::Error; malformed JSON as nlohmann exceptions.
json run_command(const std::string& name, const json& args);
std::vector<std::string> command_names();

// exit-status class of an error: 2 for malformed input, 1 otherwise
int error_status(ErrorCode c);
json error_json(const Error& e);

}
