#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "catan/rng.hpp"

namespace catanrl {

// Canonical resource order. Every vector indexed by resource uses it.
enum class Resource : std::uint8_t { Brick = 0, Lumber, Ore, Grain, Wool };
inline constexpr int kNumResources = 5;
inline constexpr std::array<Resource, kNumResources> kAllResources = {
    Resource::Brick, Resource::Lumber, Resource::Ore, Resource::Grain, Resource::Wool};

const char* resource_name(Resource r);

enum class DevCard : std::uint8_t { Knight = 0, RoadBuilding, YearOfPlenty, Monopoly, VictoryPoint };
inline constexpr int kNumDevCards = 5;
const char* dev_card_name(DevCard c);

// Per-resource counts (a resource multiset).
struct ResourceVec {
    std::array<int, kNumResources> counts{};

    int& operator[](Resource r) { return counts[static_cast<int>(r)]; }
    int operator[](Resource r) const { return counts[static_cast<int>(r)]; }
    int& at(int i) { return counts[i]; }
    int at(int i) const { return counts[i]; }

    int total() const;
    bool contains(const ResourceVec& other) const; // other is a sub-multiset of this
    void add(const ResourceVec& other);
    void subtract(const ResourceVec& other);

    bool operator==(const ResourceVec&) const = default;
};

ResourceVec make_resources(int brick, int lumber, int ore, int grain, int wool);

// Draw one card uniformly at random from the multiset. Requires total() > 0.
Resource draw_random_card(const ResourceVec& hand, Rng& rng);

// Discard resolution for the keep-4 abstraction: the four named cards are
// kept, (keep_count - 4) further survivors are drawn uniformly from the
// rest of the hand, and everything else is discarded.
//
// Requires keep4 to be a sub-multiset of hand (throws KeepNotInHand
// otherwise) and keep_count >= 4. Returns the discarded multiset, of size
// hand.total() - keep_count.
ResourceVec resolve_discard(const ResourceVec& hand, const ResourceVec& keep4,
                            int keep_count, Rng& rng);

} // namespace catanrl
