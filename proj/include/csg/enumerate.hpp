#pragma once

#include <optional>

#include "csg/spec.hpp"

namespace csg {

/// Streams every valid matrix for a fixed split (n1, n2), each exactly once.
///
/// Depth-first over row prefixes: first rows run m11 = n1 down to 1 with
/// m12 = 0 up to n2 (single-row matrices with m12 = n2 are skipped, not
/// yielded); a prefix is yielded before its extensions; extensions run the
/// next first component downward and the second component upward from the
/// smallest value that keeps row sums strictly increasing. The order is
/// frozen; golden tests pin it. State is O(r), nothing is buffered.
class SplitEnumerator {
public:
    SplitEnumerator(int n1, int n2);  // throws SpecError unless n1, n2 >= 1

    /// Next spec in the frozen order, or nullopt when exhausted.
    std::optional<CompleteGameSpec> next();

    int n1() const { return n1_; }
    int n2() const { return n2_; }

private:
    enum class Phase { Visit, Descend, Advance, Done };

    bool prefix_is_valid() const;
    std::optional<Profile> first_child() const;
    std::optional<Profile> next_sibling(Profile row, int parent_sum) const;
    std::optional<Profile> next_root(Profile row) const;

    int n1_;
    int n2_;
    std::vector<Profile> rows_;
    Phase phase_ = Phase::Visit;
};

/// Concatenation of SplitEnumerator(a, n-a) for a = 1..n-1.
class AllEnumerator {
public:
    explicit AllEnumerator(int n);  // throws SpecError unless n >= 2

    std::optional<CompleteGameSpec> next();

private:
    int n_;
    int a_;
    std::optional<SplitEnumerator> split_;
};

} // namespace csg
