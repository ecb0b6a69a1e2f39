#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csg/bigcount.hpp"
#include "csg/game.hpp"

namespace csg {

/// The census enumerates every monotone family; Dedekind growth caps n.
inline constexpr int kMaxCensusVoters = 5;

/// canonical_form scans all n! relabelings.
inline constexpr int kMaxCanonicalVoters = 8;

/// Visits every simple game on n labeled voters exactly once, as minimal
/// winning antichains grown over the fixed mask order. 2 <= n <= 5.
void for_each_simple_game(int n, const std::function<void(const SimpleGame&)>& visit);

/// Labeled-game count by the independent subset-lattice sweep over all
/// 2^(2^n - 1) coalition families; n <= 4.
std::uint64_t count_simple_games_sweep(int n);

/// Lexicographically least minimal-winning family over all voter
/// relabelings. Keys are equal iff the games are isomorphic.
std::vector<Coalition> canonical_form(const SimpleGame& g);

struct CensusReport {
    int n = 0;
    std::uint64_t labeled_games = 0;
    std::uint64_t iso_classes = 0;
    // Key: (is_complete, class count); incomplete games bucket under types 0.
    std::map<std::pair<bool, int>, std::uint64_t> by_type_count;

    std::uint64_t bucket(bool complete, int types) const;
};

/// Buckets every isomorphism class on n voters by completeness and type
/// count, using desirability scans only. 2 <= n <= 5.
CensusReport census(int n);

struct CrossCheckRow {
    int n = 0;
    std::int64_t labeled = -1;      // -1 when the census leg does not run
    std::int64_t iso_classes = -1;
    std::int64_t complete_one_type = -1;
    std::int64_t complete_two_types = -1;  // census bucket, or stream length for n > 5
    std::uint64_t enumerated = 0;
    BigCount h_formula;
    bool distinct_checked = false;
    bool ok = true;
    std::string note;  // first mismatch, with the offending value
};

struct CrossCheckReport {
    bool ok = true;
    std::vector<CrossCheckRow> rows;
};

/// Ground-truth sweep for n = 2..n_max (n_max <= 16):
///   census bucket (complete, 2 types) and (complete, 1 type) vs the formula
///   and May's count, for n <= 5;
///   enumeration stream length vs the formula, for all n;
///   pairwise-distinct canonical forms of the realized specs, for n <= 8.
CrossCheckReport cross_check(int n_max);

} // namespace csg
