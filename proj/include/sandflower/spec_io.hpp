#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "sandflower/flower.hpp"
#include "sandflower/graph.hpp"

namespace sandflower {

// {"ks": [...]} for a chain, {"center": t, "petals": [{"ks": [...]}, ...]} for a flower.
using SpecFile = std::variant<ChainSpec, FlowerSpec>;

// Throws Parse on schema problems; value constraints are checked by validate().
SpecFile parse_spec(const nlohmann::json& doc);
SpecFile parse_spec_text(std::string_view text);

nlohmann::json to_json(const ChainSpec& spec);
nlohmann::json to_json(const FlowerSpec& spec);

// "4,4,4,4"; an empty string is the trivial chain.
ChainSpec parse_ks(std::string_view text);
// "0,2|1,3" with 0-based petal indices.
Parts parse_parts(std::string_view text);

// Compact text form, e.g. "t=3 [3] [3] []".
std::string encode(const ChainSpec& spec);
std::string encode(const FlowerSpec& spec);

}  // namespace sandflower
