#include "catan/resources.hpp"

#include "catan/errors.hpp"

namespace catanrl {

const char* resource_name(Resource r) {
    switch (r) {
        case Resource::Brick: return "Brick";
        case Resource::Lumber: return "Lumber";
        case Resource::Ore: return "Ore";
        case Resource::Grain: return "Grain";
        case Resource::Wool: return "Wool";
    }
    return "?";
}

const char* dev_card_name(DevCard c) {
    switch (c) {
        case DevCard::Knight: return "Knight";
        case DevCard::RoadBuilding: return "RoadBuilding";
        case DevCard::YearOfPlenty: return "YearOfPlenty";
        case DevCard::Monopoly: return "Monopoly";
        case DevCard::VictoryPoint: return "VictoryPoint";
    }
    return "?";
}

int ResourceVec::total() const {
    int t = 0;
    for (int c : counts) t += c;
    return t;
}

bool ResourceVec::contains(const ResourceVec& other) const {
    for (int i = 0; i < kNumResources; ++i)
        if (other.counts[i] > counts[i]) return false;
    return true;
}

void ResourceVec::add(const ResourceVec& other) {
    for (int i = 0; i < kNumResources; ++i) counts[i] += other.counts[i];
}

void ResourceVec::subtract(const ResourceVec& other) {
    for (int i = 0; i < kNumResources; ++i) counts[i] -= other.counts[i];
}

ResourceVec make_resources(int brick, int lumber, int ore, int grain, int wool) {
    ResourceVec v;
    v.counts = {brick, lumber, ore, grain, wool};
    return v;
}

Resource draw_random_card(const ResourceVec& hand, Rng& rng) {
    int pick = rng.uniform_int(0, hand.total() - 1);
    for (int i = 0; i < kNumResources; ++i) {
        pick -= hand.counts[i];
        if (pick < 0) return static_cast<Resource>(i);
    }
    return Resource::Wool; // unreachable when total() > 0
}

ResourceVec resolve_discard(const ResourceVec& hand, const ResourceVec& keep4,
                            int keep_count, Rng& rng) {
    if (!hand.contains(keep4))
        throw KeepNotInHand("keep multiset is not contained in the hand");

    ResourceVec rest = hand;
    rest.subtract(keep4);

    // Random survivors beyond the four named cards.
    int extra = keep_count - 4;
    ResourceVec kept_extra{};
    while (extra > 0 && rest.total() > 0) {
        Resource r = draw_random_card(rest, rng);
        rest[r] -= 1;
        kept_extra[r] += 1;
        --extra;
    }
    return rest;
}

} // namespace catanrl
