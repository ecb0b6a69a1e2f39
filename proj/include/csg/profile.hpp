#pragma once

#include <ostream>

namespace csg {

/// Coalition profile: how many voters of each type a coalition contains.
struct Profile {
    int m1 = 0;
    int m2 = 0;

    friend constexpr bool operator==(Profile, Profile) = default;
};

/// Partial order on profiles by comparison of partial sums:
/// p dominates q iff p.m1 >= q.m1 and p.m1+p.m2 >= q.m1+q.m2.
constexpr bool delta_dominates(Profile p, Profile q) {
    return p.m1 >= q.m1 && p.m1 + p.m2 >= q.m1 + q.m2;
}

/// Total order: first component decides, ties broken by the second.
constexpr bool lex_greater(Profile p, Profile q) {
    return p.m1 > q.m1 || (p.m1 == q.m1 && p.m2 > q.m2);
}

constexpr bool lex_less(Profile p, Profile q) { return lex_greater(q, p); }

/// Componentwise order; strictly finer than delta dominance.
constexpr bool componentwise_leq(Profile p, Profile q) {
    return p.m1 <= q.m1 && p.m2 <= q.m2;
}

inline std::ostream& operator<<(std::ostream& os, Profile p) {
    return os << '(' << p.m1 << ',' << p.m2 << ')';
}

} // namespace csg
