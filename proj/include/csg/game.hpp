#pragma once

#include <cstdint>
#include <vector>

#include "csg/spec.hpp"

namespace csg {

/// Voter subset as a bit mask; voter i occupies bit i-1.
using Coalition = std::uint32_t;

struct GameError : Error {
    using Error::Error;
};

/// Explicit-game operations scan subsets exhaustively, so n is kept small.
inline constexpr int kMaxGameVoters = 20;

Coalition coalition_from_members(const std::vector<int>& voters, int n);
std::vector<int> coalition_members(Coalition s);

/// Simple game on n labeled voters, stored by its minimal winning family.
struct SimpleGame {
    int n = 0;
    std::vector<Coalition> minimal_winning;  // ascending mask order, an antichain

    friend bool operator==(const SimpleGame&, const SimpleGame&) = default;
};

/// Validates and wraps a minimal-winning family. The family is sorted and
/// deduplicated (it is a set); an empty family, the empty coalition,
/// out-of-range members, or containment between members is rejected.
SimpleGame make_game(int n, std::vector<Coalition> minimal_winning);

/// A coalition wins iff it contains some minimal winning coalition.
bool is_winning(const SimpleGame& g, Coalition s);

} // namespace csg
