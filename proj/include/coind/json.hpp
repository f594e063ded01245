#pragma once

#include <json.hpp>

namespace coind {
using Json = nlohmann::ordered_json;
}
