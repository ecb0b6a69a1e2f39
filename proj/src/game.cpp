#include "csg/game.hpp"

#include <algorithm>
#include <sstream>

namespace csg {

Coalition coalition_from_members(const std::vector<int>& voters, int n) {
    Coalition s = 0;
    for (int v : voters) {
        if (v < 1 || v > n) {
            std::ostringstream msg;
            msg << "voter " << v << " outside 1.." << n;
            throw GameError(msg.str());
        }
        s |= Coalition{1} << (v - 1);
    }
    return s;
}

std::vector<int> coalition_members(Coalition s) {
    std::vector<int> voters;
    for (int v = 1; s != 0; ++v, s >>= 1) {
        if (s & 1) {
            voters.push_back(v);
        }
    }
    return voters;
}

SimpleGame make_game(int n, std::vector<Coalition> minimal_winning) {
    if (n < 1 || n > kMaxGameVoters) {
        std::ostringstream msg;
        msg << "n must be in 1.." << kMaxGameVoters << ", got " << n;
        throw GameError(msg.str());
    }
    if (minimal_winning.empty()) {
        throw GameError("minimal winning family must be nonempty");
    }
    const Coalition everyone = (Coalition{1} << n) - 1;
    std::sort(minimal_winning.begin(), minimal_winning.end());
    minimal_winning.erase(std::unique(minimal_winning.begin(), minimal_winning.end()),
                          minimal_winning.end());
    for (Coalition s : minimal_winning) {
        if (s == 0) {
            throw GameError("the empty coalition cannot be winning");
        }
        if (s & ~everyone) {
            throw GameError("coalition contains a voter outside 1..n");
        }
    }
    for (std::size_t i = 0; i < minimal_winning.size(); ++i) {
        for (std::size_t j = i + 1; j < minimal_winning.size(); ++j) {
            const Coalition meet = minimal_winning[i] & minimal_winning[j];
            if (meet == minimal_winning[i] || meet == minimal_winning[j]) {
                throw GameError("minimal winning family is not an antichain");
            }
        }
    }
    return SimpleGame{n, std::move(minimal_winning)};
}

bool is_winning(const SimpleGame& g, Coalition s) {
    for (Coalition w : g.minimal_winning) {
        if ((w & s) == w) {
            return true;
        }
    }
    return false;
}

} // namespace csg
