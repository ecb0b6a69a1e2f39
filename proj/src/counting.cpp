#include "csg/counting.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace csg {

namespace {

// Pascal rows built on demand and immutable afterwards. The outer vector may
// reallocate while growing, but each row's element storage never moves, so
// pointers handed out under the lock stay valid.
class BinomialTable {
public:
    const BigCount* row(std::size_t m) {
        if (m > kMaxRow) {
            throw std::length_error("binom: argument too large for the Pascal table");
        }
        std::lock_guard<std::mutex> lock(mutex_);
        while (rows_.size() <= m) {
            const std::size_t r = rows_.size();
            std::vector<BigCount> row(r + 1);
            row.front() = 1;
            row.back() = 1;
            for (std::size_t k = 1; k < r; ++k) {
                row[k] = rows_[r - 1][k - 1] + rows_[r - 1][k];
            }
            rows_.push_back(std::move(row));
        }
        return rows_[m].data();
    }

private:
    // Quadratic storage; the cap fails cleanly instead of exhausting memory.
    static constexpr std::size_t kMaxRow = 5000;

    std::mutex mutex_;
    std::vector<std::vector<BigCount>> rows_;
};

BinomialTable& binomials() {
    static BinomialTable table;
    return table;
}

std::uint64_t polynomial_term(long long n) {
    const auto u = static_cast<std::uint64_t>(n);
    return u * u + 4 * u + 8;
}

} // namespace

BigCount binom(long long m, long long k) {
    if (k < 0 || m < k) {
        return {};
    }
    return binomials().row(static_cast<std::size_t>(m))[static_cast<std::size_t>(k)];
}

BigCount fib(long long n) {
    if (n < 0) {
        throw std::invalid_argument("fib: n must be non-negative");
    }
    BigCount prev;      // F(0)
    BigCount current(1);  // F(1)
    if (n == 0) {
        return prev;
    }
    for (long long i = 1; i < n; ++i) {
        prev += current;
        std::swap(prev, current);
    }
    return current;
}

BigCount count_N(long long a, long long s, long long b) {
    if (a < 0 || b < 0 || s < a) {
        return {};
    }
    const long long tail = s - a;
    if (tail > b) {
        return {};
    }
    if (tail == b) {
        return 1;
    }
    const long long m = b + a - 2 - s;
    if (m < 0) {
        return {};
    }
    BigCount total;
    const BigCount* row = binomials().row(static_cast<std::size_t>(m));
    const long long k_max = std::min(a - 1, m);
    for (long long k = 0; k <= k_max; ++k) {
        total += row[k];
    }
    return total;
}

BigCount count_N_oracle(int a, int s, int b, int depth_cap) {
    if (depth_cap < 0) {
        throw std::invalid_argument("count_N_oracle: negative depth cap");
    }
    if (a > depth_cap || b > depth_cap || s - a > depth_cap) {
        throw std::invalid_argument("count_N_oracle: arguments exceed the brute-force cap");
    }
    if (a < 0 || b < 0 || s < a) {
        return {};
    }

    // Every row after the first has first component < a, and the final row is
    // (f1, b) with f1 <= a-1, so no reachable row sum exceeds a-1+b; that
    // bounds the candidate second components and makes the walk finite.
    const int max_sum = a - 1 + b;
    std::uint64_t matrices = 0;
    auto extend = [&](auto&& self, int last_m1, int last_sum) -> void {
        if (last_sum - last_m1 == b) {
            ++matrices;  // stop here: this row is a valid last row
        }
        for (int d1 = last_m1 - 1; d1 >= 0; --d1) {
            // last_sum >= last_m1 > d1, so the smallest admissible d2 is >= 2
            for (int d2 = last_sum - d1 + 1; d1 + d2 <= max_sum; ++d2) {
                self(self, d1, d1 + d2);
            }
        }
    };
    extend(extend, a, s);
    return matrices;
}

BigCount count_G(long long a, long long b) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("count_G: class sizes must be non-negative");
    }
    if (a > (1ll << 31)) {  // keeps the a-k scale factors within a machine word
        throw std::invalid_argument("count_G: a too large");
    }
    BigCount total(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b));
    if (a == 0 || b < 2) {
        return total;
    }
    // sum_{i=0}^{a} sum_{k=0}^{i-1} C(b, k+2): term k appears once for each
    // i in [k+1, a], i.e. a-k times.
    const BigCount* row = binomials().row(static_cast<std::size_t>(b));
    const long long k_max = std::min(a - 1, b - 2);
    for (long long k = 0; k <= k_max; ++k) {
        total.add_scaled(row[k + 2], static_cast<std::uint32_t>(a - k));
    }
    return total;
}

BigCount count_H_formula(long long n) {
    if (n < 0) {
        throw std::invalid_argument("count_H_formula: n must be non-negative");
    }
    BigCount result = fib(n + 6);
    result -= BigCount(polynomial_term(n));
    return result;
}

BigCount count_H_sum(long long n) {
    if (n < 0) {
        throw std::invalid_argument("count_H_sum: n must be non-negative");
    }
    BigCount total;
    for (long long a = 1; a <= n; ++a) {
        total += count_G(a, n - a);
    }
    return total;
}

} // namespace csg
