#pragma once

#include <json.hpp>

namespace edom {

// Insertion-ordered so serialized field order is stable.
using Json = nlohmann::ordered_json;

}  // namespace edom
