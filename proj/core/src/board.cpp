#include "catan/board.hpp"

#include <vector>

namespace catanrl {

const char* harbor_kind_name(HarborKind k) {
    switch (k) {
        case HarborKind::Generic: return "Generic";
        case HarborKind::Brick: return "Brick";
        case HarborKind::Lumber: return "Lumber";
        case HarborKind::Ore: return "Ore";
        case HarborKind::Grain: return "Grain";
        case HarborKind::Wool: return "Wool";
    }
    return "?";
}

namespace {

// Fisher-Yates driven by our Rng for cross-platform determinism.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
        int j = rng.uniform_int(0, i);
        std::swap(v[i], v[j]);
    }
}

} // namespace

BoardLayout generate_board(Rng& rng) {
    BoardLayout layout{};

    std::vector<std::optional<Resource>> kinds;
    kinds.push_back(std::nullopt); // desert
    for (int i = 0; i < 4; ++i) kinds.push_back(Resource::Lumber);
    for (int i = 0; i < 4; ++i) kinds.push_back(Resource::Wool);
    for (int i = 0; i < 4; ++i) kinds.push_back(Resource::Grain);
    for (int i = 0; i < 3; ++i) kinds.push_back(Resource::Brick);
    for (int i = 0; i < 3; ++i) kinds.push_back(Resource::Ore);
    shuffle(kinds, rng);

    std::vector<int> tokens = {2, 3, 3, 4, 4, 5, 5, 6, 6, 8, 8, 9, 9, 10, 10, 11, 11, 12};
    shuffle(tokens, rng);

    int next_token = 0;
    for (int h = 0; h < kNumHexes; ++h) {
        layout.hex_resource[h] = kinds[h];
        if (!kinds[h]) {
            layout.number_token[h] = 0;
            layout.desert_hex = static_cast<std::int8_t>(h);
        } else {
            layout.number_token[h] = static_cast<std::uint8_t>(tokens[next_token++]);
        }
    }

    std::vector<HarborKind> harbor_kinds = {
        HarborKind::Generic, HarborKind::Generic, HarborKind::Generic, HarborKind::Generic,
        HarborKind::Brick,   HarborKind::Lumber,  HarborKind::Ore,
        HarborKind::Grain,   HarborKind::Wool};
    shuffle(harbor_kinds, rng);
    for (int i = 0; i < kNumHarbors; ++i) layout.harbor_kind[i] = harbor_kinds[i];

    return layout;
}

} // namespace catanrl
