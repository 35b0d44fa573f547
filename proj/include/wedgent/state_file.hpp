#pragma once

#include "wedgent/state.hpp"

#include <json.hpp>

#include <filesystem>

namespace wedgent {

// State file layout:
//   {"dims": [2, 2],
//    "amplitudes": [{"idx": [0, 0], "re": 0.7071067811865476, "im": 0.0}, ...]}
// Missing entries are zero and unknown fields are rejected. Doubles are
// written in shortest round-trip form, so save/load is bit-exact.

// Throws SchemaError naming the offending field path.
PureState state_from_json(const nlohmann::json& doc);
nlohmann::json state_to_json(const PureState& state);

// Throws IoError or SchemaError.
PureState load_state(const std::filesystem::path& path);
void save_state(const std::filesystem::path& path, const PureState& state);

} // namespace wedgent
