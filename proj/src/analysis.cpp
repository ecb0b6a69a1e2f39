#include "csg/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "csg/oracle.hpp"

namespace csg {

namespace {

void check_voter(const SimpleGame& g, int v) {
    if (v < 1 || v > g.n) {
        std::ostringstream msg;
        msg << "voter " << v << " outside 1.." << g.n;
        throw GameError(msg.str());
    }
}

// All coalitions with exactly k members drawn from the low `universe` bits,
// in ascending mask order (Gosper's hack).
std::vector<Coalition> combinations(int universe, int k) {
    std::vector<Coalition> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    if (k > universe) {
        return out;
    }
    const Coalition limit = Coalition{1} << universe;
    Coalition v = (Coalition{1} << k) - 1;
    while (v < limit) {
        out.push_back(v);
        const Coalition u = v & (~v + 1);
        const Coalition w = v + u;
        v = w | (((v ^ w) >> 2) / u);
    }
    return out;
}

// Winning table over the profile rectangle, win[m1][m2].
std::vector<std::vector<bool>> winning_table(const CompleteGameSpec& spec) {
    std::vector<std::vector<bool>> win(spec.n1 + 1, std::vector<bool>(spec.n2 + 1, false));
    for (int m1 = 0; m1 <= spec.n1; ++m1) {
        for (int m2 = 0; m2 <= spec.n2; ++m2) {
            const Profile p{m1, m2};
            for (const Profile& row : spec.rows) {
                if (delta_dominates(p, row)) {
                    win[m1][m2] = true;
                    break;
                }
            }
        }
    }
    return win;
}

} // namespace

NotCompleteError::NotCompleteError(IncomparabilityWitness w)
    : Error("game is not complete: voters incomparable"), witness(w) {}

TypeCountError::TypeCountError(int t)
    : Error("game does not have exactly two voter types: has " + std::to_string(t)),
      types(t) {}

bool more_desirable(const SimpleGame& g, int i, int j) {
    check_voter(g, i);
    check_voter(g, j);
    if (i == j) {
        throw GameError("more_desirable requires distinct voters");
    }
    const Coalition bit_i = Coalition{1} << (i - 1);
    const Coalition bit_j = Coalition{1} << (j - 1);
    const Coalition all = (Coalition{1} << g.n) - 1;
    for (Coalition s = 0; s <= all; ++s) {
        if (s & (bit_i | bit_j)) {
            continue;
        }
        if (is_winning(g, s | bit_j) && !is_winning(g, s | bit_i)) {
            return false;
        }
    }
    return true;
}

Desirability compare_desirability(const SimpleGame& g, int i, int j) {
    check_voter(g, i);
    check_voter(g, j);
    if (i == j) {
        return Desirability::Equally;
    }
    const Coalition bit_i = Coalition{1} << (i - 1);
    const Coalition bit_j = Coalition{1} << (j - 1);
    const Coalition all = (Coalition{1} << g.n) - 1;
    bool i_geq = true;  // every s u {j} win implies s u {i} win
    bool j_geq = true;
    for (Coalition s = 0; s <= all && (i_geq || j_geq); ++s) {
        if (s & (bit_i | bit_j)) {
            continue;
        }
        const bool wi = is_winning(g, s | bit_i);
        const bool wj = is_winning(g, s | bit_j);
        if (wj && !wi) {
            i_geq = false;
        }
        if (wi && !wj) {
            j_geq = false;
        }
    }
    if (i_geq && j_geq) {
        return Desirability::Equally;
    }
    if (i_geq) {
        return Desirability::StrictlyMore;
    }
    if (j_geq) {
        return Desirability::StrictlyLess;
    }
    return Desirability::Incomparable;
}

Classification classify(const SimpleGame& g) {
    // Verdicts for ordered pairs i < j, indexed [i-1][j-i-1].
    std::vector<std::vector<Desirability>> verdict(g.n);
    for (int i = 1; i <= g.n; ++i) {
        for (int j = i + 1; j <= g.n; ++j) {
            verdict[i - 1].push_back(compare_desirability(g, i, j));
        }
    }

    for (int i = 1; i <= g.n; ++i) {
        for (int j = i + 1; j <= g.n; ++j) {
            if (verdict[i - 1][j - i - 1] != Desirability::Incomparable) {
                continue;
            }
            // First subset witnessing that j does not dominate i.
            const Coalition bit_i = Coalition{1} << (i - 1);
            const Coalition bit_j = Coalition{1} << (j - 1);
            const Coalition all = (Coalition{1} << g.n) - 1;
            for (Coalition s = 0; s <= all; ++s) {
                if (s & (bit_i | bit_j)) {
                    continue;
                }
                if (is_winning(g, s | bit_i) && !is_winning(g, s | bit_j)) {
                    Classification result;
                    result.complete = false;
                    result.witness = IncomparabilityWitness{i, j, s};
                    return result;
                }
            }
            throw Error("internal: incomparable pair without witness");
        }
    }

    auto relation = [&](int i, int j) {
        if (i == j) {
            return Desirability::Equally;
        }
        if (i < j) {
            return verdict[i - 1][j - i - 1];
        }
        const Desirability d = verdict[j - 1][i - j - 1];
        if (d == Desirability::StrictlyMore) {
            return Desirability::StrictlyLess;
        }
        if (d == Desirability::StrictlyLess) {
            return Desirability::StrictlyMore;
        }
        return d;
    };

    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) {
        order[i] = i + 1;
    }
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const Desirability d = relation(i, j);
        return d == Desirability::StrictlyMore ||
               (d == Desirability::Equally && i < j);
    });

    Classification result;
    result.complete = true;
    for (int v : order) {
        auto& classes = result.partition.classes;
        if (!classes.empty() && relation(classes.back().front(), v) == Desirability::Equally) {
            classes.back().push_back(v);
        } else {
            classes.push_back({v});
        }
    }
    return result;
}

std::vector<Profile> winning_profiles(const CompleteGameSpec& spec) {
    const auto win = winning_table(spec);
    std::vector<Profile> out;
    for (int m1 = 0; m1 <= spec.n1; ++m1) {
        for (int m2 = 0; m2 <= spec.n2; ++m2) {
            if (win[m1][m2]) {
                out.push_back(Profile{m1, m2});
            }
        }
    }
    return out;
}

std::vector<Profile> min_winning_profiles(const CompleteGameSpec& spec) {
    const auto win = winning_table(spec);
    std::vector<Profile> out;
    for (int m1 = 0; m1 <= spec.n1; ++m1) {
        for (int m2 = 0; m2 <= spec.n2; ++m2) {
            if (!win[m1][m2]) {
                continue;
            }
            // Winning profiles are upward closed componentwise, so minimality
            // is equivalent to both one-step decrements losing.
            if ((m1 == 0 || !win[m1 - 1][m2]) && (m2 == 0 || !win[m1][m2 - 1])) {
                out.push_back(Profile{m1, m2});
            }
        }
    }
    return out;
}

std::vector<Profile> maximal_losing_profiles(const CompleteGameSpec& spec) {
    const auto win = winning_table(spec);
    std::vector<Profile> out;
    for (int m1 = 0; m1 <= spec.n1; ++m1) {
        for (int m2 = 0; m2 <= spec.n2; ++m2) {
            if (win[m1][m2]) {
                continue;
            }
            if ((m1 == spec.n1 || win[m1 + 1][m2]) && (m2 == spec.n2 || win[m1][m2 + 1])) {
                out.push_back(Profile{m1, m2});
            }
        }
    }
    return out;
}

SimpleGame realize(const CompleteGameSpec& spec) {
    if (spec.voters() > kMaxGameVoters) {
        std::ostringstream msg;
        msg << "cannot materialize a game on " << spec.voters() << " voters (max "
            << kMaxGameVoters << ")";
        throw GameError(msg.str());
    }
    std::vector<Coalition> family;
    for (const Profile& p : min_winning_profiles(spec)) {
        for (Coalition first : combinations(spec.n1, p.m1)) {
            for (Coalition second : combinations(spec.n2, p.m2)) {
                family.push_back(first | (second << spec.n1));
            }
        }
    }
    return make_game(spec.voters(), std::move(family));
}

CompleteGameSpec parametrize(const SimpleGame& g) {
    Classification cls = classify(g);
    if (!cls.complete) {
        throw NotCompleteError(*cls.witness);
    }
    if (cls.partition.classes.size() != 2) {
        throw TypeCountError(static_cast<int>(cls.partition.classes.size()));
    }
    const auto& top = cls.partition.classes[0];
    const auto& bottom = cls.partition.classes[1];
    const int n1 = static_cast<int>(top.size());
    const int n2 = static_cast<int>(bottom.size());

    // Coalitions with equal profiles differ by within-class swaps, so one
    // representative per profile decides the whole profile.
    std::vector<std::vector<bool>> win(n1 + 1, std::vector<bool>(n2 + 1, false));
    for (int m1 = 0; m1 <= n1; ++m1) {
        for (int m2 = 0; m2 <= n2; ++m2) {
            Coalition rep = 0;
            for (int k = 0; k < m1; ++k) {
                rep |= Coalition{1} << (top[k] - 1);
            }
            for (int k = 0; k < m2; ++k) {
                rep |= Coalition{1} << (bottom[k] - 1);
            }
            win[m1][m2] = is_winning(g, rep);
        }
    }

    std::vector<Profile> winning;
    for (int m1 = 0; m1 <= n1; ++m1) {
        for (int m2 = 0; m2 <= n2; ++m2) {
            if (win[m1][m2]) {
                winning.push_back(Profile{m1, m2});
            }
        }
    }
    MatrixM rows;
    for (const Profile& p : winning) {
        bool minimal = true;
        for (const Profile& q : winning) {
            if (q != p && delta_dominates(p, q)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            rows.push_back(p);
        }
    }
    std::sort(rows.begin(), rows.end(), [](Profile a, Profile b) { return lex_greater(a, b); });
    return validate_spec(n1, n2, std::move(rows));
}

bool are_isomorphic(const SimpleGame& a, const SimpleGame& b) {
    if (a.n != b.n) {
        return false;
    }
    auto try_parametrize = [](const SimpleGame& g) -> std::optional<CompleteGameSpec> {
        try {
            return parametrize(g);
        } catch (const NotCompleteError&) {
            return std::nullopt;
        } catch (const TypeCountError&) {
            return std::nullopt;
        }
    };
    const auto spec_a = try_parametrize(a);
    const auto spec_b = try_parametrize(b);
    if (spec_a && spec_b) {
        return *spec_a == *spec_b;
    }
    if (spec_a.has_value() != spec_b.has_value()) {
        return false;  // isomorphism preserves completeness and type count
    }
    return canonical_form(a) == canonical_form(b);
}

std::vector<int> null_voters(const SimpleGame& g) {
    Coalition seen = 0;
    for (Coalition w : g.minimal_winning) {
        seen |= w;
    }
    std::vector<int> out;
    for (int v = 1; v <= g.n; ++v) {
        if (!(seen & (Coalition{1} << (v - 1)))) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<Coalition> maximal_losing(const SimpleGame& g) {
    const Coalition all = (Coalition{1} << g.n) - 1;
    std::vector<Coalition> out;
    for (Coalition s = 0; s <= all; ++s) {
        if (is_winning(g, s)) {
            continue;
        }
        bool maximal = true;
        for (int v = 0; v < g.n; ++v) {
            const Coalition bit = Coalition{1} << v;
            if (!(s & bit) && !is_winning(g, s | bit)) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            out.push_back(s);
        }
    }
    return out;
}

} // namespace csg
