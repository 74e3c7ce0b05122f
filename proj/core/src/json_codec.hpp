#pragma once

#include <nlohmann/json.hpp>

#include "fintop/document.hpp"

namespace fintop::detail {

using Json = nlohmann::ordered_json;

Json space_to_json(const SpaceDocument& doc);
SpaceDocument space_from_json(const Json& j);

}  // namespace fintop::detail
