#pragma once

#include <string>
#include <vector>

#include "catan/engine.hpp"

namespace catanrl {

// One JSON object per line: {turn, player, action, dice?, produced?,
// stolen?, phase}; action names match the Action inventory.
std::string record_to_json_line(const TransitionRecord& rec);

void write_transcript(const std::vector<TransitionRecord>& records, const std::string& path);

} // namespace catanrl
