#include "csg/bigcount.hpp"

#include <algorithm>
#include <stdexcept>

namespace csg {

BigCount::BigCount(std::uint64_t value) {
    if (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value));
        if (value >> 32) {
            limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
        }
    }
}

void BigCount::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) {
        limbs_.pop_back();
    }
}

std::optional<std::uint64_t> BigCount::to_u64() const {
    switch (limbs_.size()) {
        case 0: return 0;
        case 1: return limbs_[0];
        case 2: return (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
        default: return std::nullopt;
    }
}

BigCount& BigCount::operator+=(const BigCount& rhs) {
    const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
    limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) {
            sum += rhs.limbs_[i];
        }
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    return *this;
}

BigCount& BigCount::operator-=(const BigCount& rhs) {
    if (*this < rhs) {
        throw std::underflow_error("BigCount: negative result");
    }
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
        if (i < rhs.limbs_.size()) {
            diff -= rhs.limbs_[i];
        }
        borrow = 0;
        if (diff < 0) {
            diff += (std::int64_t{1} << 32);
            borrow = 1;
        }
        limbs_[i] = static_cast<std::uint32_t>(diff);
    }
    normalize();
    return *this;
}

BigCount& BigCount::operator*=(std::uint32_t factor) {
    if (factor == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t prod = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(prod);
        carry = prod >> 32;
    }
    if (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
    }
    return *this;
}

BigCount& BigCount::add_scaled(const BigCount& x, std::uint32_t factor) {
    if (factor == 0 || x.limbs_.empty()) {
        return *this;
    }
    const std::size_t n = std::max(limbs_.size(), x.limbs_.size());
    limbs_.resize(n, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
        // own limb + x limb * factor + carry <= (2^32-1) + (2^32-1)^2 + (2^32-1)
        // = 2^64 - 1, so the accumulator never overflows and carry stays < 2^32.
        std::uint64_t sum = carry + limbs_[i];
        if (i < x.limbs_.size()) {
            sum += static_cast<std::uint64_t>(x.limbs_[i]) * factor;
        }
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
    return *this;
}

std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
    if (a.limbs_.size() != b.limbs_.size()) {
        return a.limbs_.size() <=> b.limbs_.size();
    }
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) {
            return a.limbs_[i] <=> b.limbs_[i];
        }
    }
    return std::strong_ordering::equal;
}

std::string BigCount::str() const {
    if (limbs_.empty()) {
        return "0";
    }
    // Repeated division by 10^9, collecting 9-digit chunks.
    std::vector<std::uint32_t> work(limbs_.rbegin(), limbs_.rend());  // big endian
    std::string out;
    std::vector<std::uint32_t> quotient;
    while (!work.empty()) {
        quotient.clear();
        std::uint64_t rem = 0;
        for (std::uint32_t limb : work) {
            std::uint64_t cur = (rem << 32) | limb;
            std::uint32_t q = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
            if (!quotient.empty() || q != 0) {
                quotient.push_back(q);
            }
        }
        std::string chunk = std::to_string(rem);
        if (!quotient.empty()) {
            chunk.insert(0, 9 - chunk.size(), '0');
        }
        out.insert(0, chunk);
        work = quotient;
    }
    return out;
}

} // namespace csg
