#pragma once

#include <vector>

#include "catan/action_codec.hpp"
#include "catan/encoding.hpp"

namespace catanrl {

// One learner move. The successor is the learner's next decision point
// (opponent moves and chance in between belong to the environment);
// reward is nonzero only on terminal experiences.
struct Experience {
    StateEncoding state;
    Mask mask;
    int action_index = -1;
    double reward = 0.0;
    bool terminal = false;
    StateEncoding successor;
    Mask successor_mask;

    Experience() : mask(0), successor_mask(0) {}
};

struct Batch {
    std::vector<Experience> items;
    int worker_id = -1;
    long policy_version = 0; // updater count of the snapshot that produced it

    int size() const { return static_cast<int>(items.size()); }
};

} // namespace catanrl
