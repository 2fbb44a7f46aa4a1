#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ferncore/counting.hpp"
#include "ferncore/regions.hpp"

namespace ferncore {

nlohmann::ordered_json region_json(const std::string& spec_text, const Built& b);
// SVG of the region, with the given tiling drawn on top when present
std::string region_svg(const Region& r, const std::optional<Tiling>& tiling = std::nullopt);

}  // namespace ferncore
