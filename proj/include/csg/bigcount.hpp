#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace csg {

/// Exact non-negative integer of unbounded size. Supports just what the
/// counting formulas need: addition, subtraction with non-negative result,
/// multiplication by a machine-word factor, comparison, and decimal output.
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t value);  // NOLINT: implicit by design, counts mix freely

    bool is_zero() const { return limbs_.empty(); }

    /// Full decimal form, never scientific notation.
    std::string str() const;

    /// Value as uint64 when it fits.
    std::optional<std::uint64_t> to_u64() const;

    BigCount& operator+=(const BigCount& rhs);

    /// Throws std::underflow_error when rhs > *this.
    BigCount& operator-=(const BigCount& rhs);

    BigCount& operator*=(std::uint32_t factor);

    /// *this += x * factor, without a temporary.
    BigCount& add_scaled(const BigCount& x, std::uint32_t factor);

    friend BigCount operator+(BigCount a, const BigCount& b) { return a += b; }
    friend BigCount operator-(BigCount a, const BigCount& b) { return a -= b; }
    friend BigCount operator*(BigCount a, std::uint32_t f) { return a *= f; }

    friend bool operator==(const BigCount&, const BigCount&) = default;
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b);

    friend std::ostream& operator<<(std::ostream& os, const BigCount& v) {
        return os << v.str();
    }

private:
    // Base 2^32 limbs, little endian, no trailing zero limbs (zero is empty).
    std::vector<std::uint32_t> limbs_;

    void normalize();
};

} // namespace csg
