#include "csg/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "csg/analysis.hpp"
#include "csg/counting.hpp"
#include "csg/enumerate.hpp"

namespace csg {

namespace {

void check_census_range(const char* what, int n) {
    if (n < 2 || n > kMaxCensusVoters) {
        std::ostringstream msg;
        msg << what << " supports 2 <= n <= " << kMaxCensusVoters << ", got " << n;
        throw GameError(msg.str());
    }
}

bool comparable(Coalition a, Coalition b) {
    const Coalition meet = a & b;
    return meet == a || meet == b;
}

} // namespace

void for_each_simple_game(int n, const std::function<void(const SimpleGame&)>& visit) {
    check_census_range("for_each_simple_game", n);
    const Coalition full = (Coalition{1} << n) - 1;
    std::vector<Coalition> chosen;
    // Grow antichains along the fixed mask order; every nonempty antichain of
    // nonempty coalitions is reached exactly once.
    auto grow = [&](auto&& self, Coalition from) -> void {
        for (Coalition c = from; c <= full; ++c) {
            bool fits = true;
            for (Coalition x : chosen) {
                if (comparable(x, c)) {
                    fits = false;
                    break;
                }
            }
            if (!fits) {
                continue;
            }
            chosen.push_back(c);
            visit(SimpleGame{n, chosen});
            self(self, c + 1);
            chosen.pop_back();
        }
    };
    grow(grow, 1);
}

std::uint64_t count_simple_games_sweep(int n) {
    if (n < 1 || n > 4) {
        throw GameError("count_simple_games_sweep supports n <= 4");
    }
    const int coalitions = (1 << n) - 1;  // nonempty coalitions 1..2^n-1
    const std::uint64_t families = std::uint64_t{1} << coalitions;
    std::uint64_t count = 0;
    for (std::uint64_t fam = 1; fam < families; ++fam) {
        bool antichain = true;
        for (int c = 1; c <= coalitions && antichain; ++c) {
            if (!(fam >> (c - 1) & 1)) {
                continue;
            }
            for (int d = c + 1; d <= coalitions; ++d) {
                if ((fam >> (d - 1) & 1) &&
                    comparable(static_cast<Coalition>(c), static_cast<Coalition>(d))) {
                    antichain = false;
                    break;
                }
            }
        }
        if (antichain) {
            ++count;
        }
    }
    return count;
}

std::vector<Coalition> canonical_form(const SimpleGame& g) {
    if (g.n < 1 || g.n > kMaxCanonicalVoters) {
        std::ostringstream msg;
        msg << "canonical_form scans n! relabelings; n <= " << kMaxCanonicalVoters
            << " required, got " << g.n;
        throw GameError(msg.str());
    }
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) {
        perm[i] = i;
    }
    std::vector<Coalition> best;
    std::vector<Coalition> mapped(g.minimal_winning.size());
    do {
        for (std::size_t k = 0; k < g.minimal_winning.size(); ++k) {
            Coalition src = g.minimal_winning[k];
            Coalition dst = 0;
            for (int bit = 0; src != 0; ++bit, src >>= 1) {
                if (src & 1) {
                    dst |= Coalition{1} << perm[bit];
                }
            }
            mapped[k] = dst;
        }
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) {
            best = mapped;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::uint64_t CensusReport::bucket(bool complete, int types) const {
    const auto it = by_type_count.find({complete, types});
    return it == by_type_count.end() ? 0 : it->second;
}

CensusReport census(int n) {
    check_census_range("census", n);
    CensusReport report;
    report.n = n;
    std::map<std::vector<Coalition>, SimpleGame> classes;
    for_each_simple_game(n, [&](const SimpleGame& g) {
        ++report.labeled_games;
        classes.emplace(canonical_form(g), g);
    });
    report.iso_classes = classes.size();
    for (const auto& [key, game] : classes) {
        const Classification cls = classify(game);
        const int types = cls.complete ? static_cast<int>(cls.partition.classes.size()) : 0;
        ++report.by_type_count[{cls.complete, types}];
    }
    return report;
}

CrossCheckReport cross_check(int n_max) {
    if (n_max < 2 || n_max > 16) {
        throw GameError("cross_check supports 2 <= n_max <= 16");
    }
    CrossCheckReport report;
    for (int n = 2; n <= n_max; ++n) {
        CrossCheckRow row;
        row.n = n;
        row.h_formula = count_H_formula(n);
        auto fail = [&](const std::string& note) {
            if (row.ok) {
                row.ok = false;
                row.note = note;
            }
        };

        if (n <= kMaxCensusVoters) {
            const CensusReport c = census(n);
            row.labeled = static_cast<std::int64_t>(c.labeled_games);
            row.iso_classes = static_cast<std::int64_t>(c.iso_classes);
            row.complete_one_type = static_cast<std::int64_t>(c.bucket(true, 1));
            row.complete_two_types = static_cast<std::int64_t>(c.bucket(true, 2));
            if (row.complete_one_type != n) {
                std::ostringstream msg;
                msg << "census(complete,1)=" << row.complete_one_type << ", expected " << n;
                fail(msg.str());
            }
            if (BigCount(c.bucket(true, 2)) != row.h_formula) {
                std::ostringstream msg;
                msg << "census(complete,2)=" << c.bucket(true, 2) << ", formula says "
                    << row.h_formula;
                fail(msg.str());
            }
        }

        std::set<std::vector<Coalition>> keys;
        const bool check_distinct = n <= kMaxCanonicalVoters;
        row.distinct_checked = check_distinct;
        AllEnumerator stream(n);
        while (auto spec = stream.next()) {
            ++row.enumerated;
            if (check_distinct) {
                if (!keys.insert(canonical_form(realize(*spec))).second) {
                    std::ostringstream msg;
                    msg << "duplicate canonical form from spec " << *spec;
                    fail(msg.str());
                }
            }
        }
        if (BigCount(row.enumerated) != row.h_formula) {
            std::ostringstream msg;
            msg << "enumerated " << row.enumerated << " specs, formula says " << row.h_formula;
            fail(msg.str());
        }
        if (n > kMaxCensusVoters) {
            row.complete_two_types = static_cast<std::int64_t>(row.enumerated);
        }

        report.ok = report.ok && row.ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace csg
