#pragma once

#include <optional>
#include <vector>

#include "csg/game.hpp"
#include "csg/spec.hpp"

namespace csg {

enum class Desirability { StrictlyMore, Equally, StrictlyLess, Incomparable };

/// Voter classes ordered from most to least desirable; together they
/// partition {1..n}, and voters are equally desirable exactly within a class.
struct TypePartition {
    std::vector<std::vector<int>> classes;

    friend bool operator==(const TypePartition&, const TypePartition&) = default;
};

/// Evidence that voters i and j are incomparable: s is disjoint from {i,j},
/// s u {i} wins while s u {j} loses, and j does not dominate i either.
struct IncomparabilityWitness {
    int i = 0;
    int j = 0;
    Coalition s = 0;
};

struct Classification {
    bool complete = false;
    TypePartition partition;                        // set when complete
    std::optional<IncomparabilityWitness> witness;  // set when not
};

struct NotCompleteError : Error {
    IncomparabilityWitness witness;
    explicit NotCompleteError(IncomparabilityWitness w);
};

struct TypeCountError : Error {
    int types = 0;
    explicit TypeCountError(int t);
};

/// True iff swapping j out for i never turns a winning coalition losing,
/// checked by exhaustive scan over all subsets avoiding i and j.
bool more_desirable(const SimpleGame& g, int i, int j);

Desirability compare_desirability(const SimpleGame& g, int i, int j);

/// Completeness verdict plus the ordered type partition, or an
/// incomparability witness for the first (i, j) pair that fails.
Classification classify(const SimpleGame& g);

/// The canonical explicit game for a validated spec: voters 1..n1 are
/// type 1, n1+1..n1+n2 are type 2, and a coalition wins iff its profile
/// delta-dominates some matrix row.
SimpleGame realize(const CompleteGameSpec& spec);

/// All profiles in the rectangle that delta-dominate some matrix row,
/// in ascending lexicographic order.
std::vector<Profile> winning_profiles(const CompleteGameSpec& spec);

/// Winning profiles minimal under the componentwise order (a superset of the
/// matrix rows, which are minimal under delta dominance).
std::vector<Profile> min_winning_profiles(const CompleteGameSpec& spec);

/// Losing profiles maximal under the componentwise order.
std::vector<Profile> maximal_losing_profiles(const CompleteGameSpec& spec);

/// Recovers (n1, n2) and the canonical matrix from an explicit game.
/// Throws NotCompleteError or TypeCountError when the game is not complete
/// with exactly two classes. Inverse of realize up to relabeling.
CompleteGameSpec parametrize(const SimpleGame& g);

/// Structural comparison of the recovered invariants when both games are
/// complete with two types; otherwise falls back to the oracle's
/// permutation-scan canonical form (small n only).
bool are_isomorphic(const SimpleGame& a, const SimpleGame& b);

/// Voters absent from every minimal winning coalition.
std::vector<int> null_voters(const SimpleGame& g);

/// Losing coalitions all of whose proper supersets win.
std::vector<Coalition> maximal_losing(const SimpleGame& g);

} // namespace csg
