#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "csg/analysis.hpp"
#include "csg/counting.hpp"
#include "csg/oracle.hpp"

using namespace csg;

namespace {

std::vector<SimpleGame> all_games(int n) {
    std::vector<SimpleGame> out;
    for_each_simple_game(n, [&](const SimpleGame& g) { out.push_back(g); });
    return out;
}

} // namespace

TEST_CASE("labeled game counts follow the Dedekind numbers minus constants") {
    CHECK(all_games(2).size() == 4);
    CHECK(all_games(3).size() == 18);
    CHECK(all_games(4).size() == 166);
    CHECK(all_games(5).size() == 7579);
}

TEST_CASE("the two enumeration strategies agree") {
    CHECK(count_simple_games_sweep(1) == 1);
    for (int n = 2; n <= 4; ++n) {
        CHECK(count_simple_games_sweep(n) == all_games(n).size());
    }
    CHECK_THROWS_AS(count_simple_games_sweep(5), GameError);
    CHECK_THROWS_AS(for_each_simple_game(6, [](const SimpleGame&) {}), GameError);
    CHECK_THROWS_AS(for_each_simple_game(1, [](const SimpleGame&) {}), GameError);
}

TEST_CASE("n = 2 games are exactly the four known families") {
    const auto games = all_games(2);
    const std::set<std::vector<Coalition>> families(
        [&] {
            std::set<std::vector<Coalition>> s;
            for (const auto& g : games) {
                s.insert(g.minimal_winning);
            }
            return s;
        }());
    CHECK(families == std::set<std::vector<Coalition>>{
                          {0b01u}, {0b10u}, {0b01u, 0b10u}, {0b11u}});
}

TEST_CASE("every yielded family is an antichain") {
    for_each_simple_game(4, [](const SimpleGame& g) {
        for (std::size_t i = 0; i < g.minimal_winning.size(); ++i) {
            for (std::size_t j = i + 1; j < g.minimal_winning.size(); ++j) {
                const Coalition meet = g.minimal_winning[i] & g.minimal_winning[j];
                CHECK(meet != g.minimal_winning[i]);
                CHECK(meet != g.minimal_winning[j]);
            }
        }
    });
}

TEST_CASE("canonical forms identify relabelings") {
    const SimpleGame a = make_game(2, {0b01u});
    const SimpleGame b = make_game(2, {0b10u});
    const SimpleGame c = make_game(2, {0b11u});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(c));

    const SimpleGame g = realize(validate_spec(2, 3, {{2, 0}, {0, 3}}));
    std::vector<Coalition> relabeled;
    for (Coalition s : g.minimal_winning) {
        Coalition t = s & 0b10000u;
        if (s & 0b00001u) t |= 0b00100u;
        if (s & 0b00010u) t |= 0b01000u;
        if (s & 0b00100u) t |= 0b00001u;
        if (s & 0b01000u) t |= 0b00010u;
        relabeled.push_back(t);
    }
    CHECK(canonical_form(g) == canonical_form(make_game(5, relabeled)));

    CHECK_THROWS_AS(canonical_form(SimpleGame{9, {0b1u}}), GameError);
}

TEST_CASE("canonical_form agrees with are_isomorphic on two-type games") {
    // Every pair of complete two-type iso classes at n <= 4, plus relabelings.
    for (int n = 2; n <= 4; ++n) {
        std::vector<SimpleGame> reps;
        std::set<std::vector<Coalition>> keys;
        for_each_simple_game(n, [&](const SimpleGame& g) {
            if (keys.insert(canonical_form(g)).second) {
                reps.push_back(g);
            }
        });
        std::vector<SimpleGame> two_type;
        for (const auto& g : reps) {
            const Classification c = classify(g);
            if (c.complete && c.partition.classes.size() == 2) {
                two_type.push_back(g);
            }
        }
        for (const auto& g1 : two_type) {
            for (const auto& g2 : two_type) {
                CHECK(are_isomorphic(g1, g2) == (canonical_form(g1) == canonical_form(g2)));
            }
        }
    }
}

TEST_CASE("census buckets at small n") {
    const CensusReport c2 = census(2);
    CHECK(c2.labeled_games == 4);
    CHECK(c2.iso_classes == 3);
    CHECK(c2.bucket(true, 1) == 2);
    CHECK(c2.bucket(true, 2) == 1);
    CHECK(c2.bucket(false, 0) == 0);

    const CensusReport c3 = census(3);
    CHECK(c3.bucket(true, 1) == 3);
    CHECK(c3.bucket(true, 2) == 5);

    const CensusReport c4 = census(4);
    CHECK(c4.bucket(true, 1) == 4);
    CHECK(c4.bucket(true, 2) == 15);

    CHECK_THROWS_AS(census(6), GameError);
    CHECK_THROWS_AS(census(1), GameError);
}

TEST_CASE("census bucket counts sum to the class total") {
    for (int n = 2; n <= 4; ++n) {
        const CensusReport report = census(n);
        std::uint64_t sum = 0;
        for (const auto& [key, count] : report.by_type_count) {
            sum += count;
        }
        CHECK(sum == report.iso_classes);
    }
}

TEST_CASE("cross_check is green through n = 5") {
    const CrossCheckReport report = cross_check(5);
    CHECK(report.ok);
    REQUIRE(report.rows.size() == 4);
    CHECK(report.rows[3].complete_two_types == 36);
    CHECK(report.rows[3].labeled == 7579);
    for (const auto& row : report.rows) {
        CHECK(row.ok);
        CHECK(row.note.empty());
        CHECK(row.distinct_checked);
    }
    CHECK_THROWS_AS(cross_check(1), GameError);
    CHECK_THROWS_AS(cross_check(17), GameError);
}

TEST_CASE("cross_check flags a corrupted expectation") {
    // The census value at n = 2 is pinned by enumeration; a shifted Fibonacci
    // index or polynomial would not survive it.
    const CensusReport c = census(2);
    const BigCount observed(c.bucket(true, 2));
    CHECK(observed + BigCount(2 * 2 + 4 * 2 + 8) == fib(2 + 6));
    CHECK(observed + BigCount(2 * 2 + 4 * 2 + 8) != fib(2 + 5));
    CHECK(observed + BigCount(2 * 2 + 4 * 2 + 7) != fib(2 + 6));
}
