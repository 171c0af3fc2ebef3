#pragma once

#include <string>

#include "catan/network.hpp"
#include "catan/trainer.hpp"

namespace catanrl {

// Operator-facing configuration: flat UTF-8 `key = value` lines, '#'
// comments, strict validation (unknown keys are rejected by name).
// Defaults follow the reference hyperparameters. echo() emits a canonical
// file that parses back to the identical configuration.
struct RunConfig {
    TrainerConfig trainer;
    NetworkConfig network;
    std::string transcript_dir;

    void set(const std::string& key, const std::string& value);
    std::string echo() const;

    static RunConfig from_text(const std::string& text);
    static RunConfig from_file(const std::string& path);
};

} // namespace catanrl
