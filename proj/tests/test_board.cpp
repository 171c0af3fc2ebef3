#include <doctest.h>

#include <map>
#include <set>

#include "catan/board.hpp"
#include "catan/state.hpp"

using namespace catanrl;

TEST_CASE("generated boards use the standard inventory") {
    for (std::uint64_t seed : {1ULL, 7ULL, 42ULL, 1234567ULL}) {
        Rng rng(seed);
        const BoardLayout layout = generate_board(rng);

        std::map<int, int> kind_counts; // -1 desert, else resource index
        std::multiset<int> tokens;
        for (int h = 0; h < kNumHexes; ++h) {
            kind_counts[layout.hex_resource[h] ? static_cast<int>(*layout.hex_resource[h])
                                               : -1] += 1;
            if (layout.hex_resource[h]) {
                tokens.insert(layout.number_token[h]);
            } else {
                CHECK(layout.number_token[h] == 0);
                CHECK(layout.desert_hex == h);
            }
        }
        CHECK(kind_counts[-1] == 1);
        CHECK(kind_counts[static_cast<int>(Resource::Lumber)] == 4);
        CHECK(kind_counts[static_cast<int>(Resource::Wool)] == 4);
        CHECK(kind_counts[static_cast<int>(Resource::Grain)] == 4);
        CHECK(kind_counts[static_cast<int>(Resource::Brick)] == 3);
        CHECK(kind_counts[static_cast<int>(Resource::Ore)] == 3);

        const std::multiset<int> expected = {2, 3, 3, 4, 4, 5, 5, 6, 6, 8, 8, 9, 9, 10, 10, 11, 11, 12};
        CHECK(tokens == expected);

        std::map<HarborKind, int> harbor_counts;
        for (HarborKind k : layout.harbor_kind) harbor_counts[k] += 1;
        CHECK(harbor_counts[HarborKind::Generic] == 4);
        for (Resource r : kAllResources)
            CHECK(harbor_counts[static_cast<HarborKind>(static_cast<int>(r) + 1)] == 1);
    }
}

TEST_CASE("same seed gives identical layouts") {
    Rng a(99), b(99);
    CHECK(generate_board(a) == generate_board(b));
}

TEST_CASE("new game starts in setup with a full bank and deck") {
    Rng rng(5);
    const GameState s = new_game(rng);
    CHECK(s.bank.total() == 95);
    CHECK(s.dev_deck_size == 25);
    CHECK(s.current_player == 0);
    CHECK(s.turn_counter == 0);
    CHECK(s.phase.kind == PhaseKind::Setup);
    CHECK(s.robber_hex == s.layout.desert_hex);

    std::array<int, kNumDevCards> deck_counts{};
    for (int i = 0; i < s.dev_deck_size; ++i)
        deck_counts[static_cast<int>(s.dev_deck[i])] += 1;
    CHECK(deck_counts[static_cast<int>(DevCard::Knight)] == 14);
    CHECK(deck_counts[static_cast<int>(DevCard::RoadBuilding)] == 2);
    CHECK(deck_counts[static_cast<int>(DevCard::YearOfPlenty)] == 2);
    CHECK(deck_counts[static_cast<int>(DevCard::Monopoly)] == 2);
    CHECK(deck_counts[static_cast<int>(DevCard::VictoryPoint)] == 5);
}

TEST_CASE("token production weights") {
    CHECK(token_combinations(7) == 6); // never placed, but the formula peak
    CHECK(token_combinations(8) == 5);
    CHECK(token_combinations(2) == 1);
    CHECK(token_combinations(12) == 1);
    CHECK(token_combinations(0) == 0);
}
