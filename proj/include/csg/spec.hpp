#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csg/profile.hpp"

namespace csg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A (n1, n2, matrix) triple violates the matrix invariant.
struct SpecError : Error {
    using Error::Error;
};

/// Rows are the delta-minimal winning profiles in canonical order:
/// strictly decreasing first component, strictly increasing row sums.
using MatrixM = std::vector<Profile>;

/// A complete simple game with two voter types, identified up to isomorphism
/// by its class sizes and canonical matrix.
struct CompleteGameSpec {
    int n1 = 0;
    int n2 = 0;
    MatrixM rows;

    int voters() const { return n1 + n2; }

    friend bool operator==(const CompleteGameSpec&, const CompleteGameSpec&) = default;
};

/// Checks the matrix conditions for (n1, n2, rows):
///   1. every entry within [0, n1] x [0, n2];
///   2. r = 1: m_{1,1} > 0 and m_{1,2} < n2;
///      r >= 2: strictly decreasing first components, strictly increasing sums.
/// Returns the first violated condition as a message, or nullopt if valid.
std::optional<std::string> spec_violation(int n1, int n2, const MatrixM& rows);

/// Validates and wraps; throws SpecError naming the violated condition.
/// Rows must already be in canonical order; out-of-order input is rejected,
/// never sorted, so spec equality stays structural.
CompleteGameSpec validate_spec(int n1, int n2, MatrixM rows);

std::ostream& operator<<(std::ostream& os, const CompleteGameSpec& spec);

} // namespace csg
