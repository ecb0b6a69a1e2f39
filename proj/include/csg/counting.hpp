#pragma once

#include "csg/bigcount.hpp"

namespace csg {

/// Binomial coefficient under the zero convention: C(m, k) = 0 whenever
/// k < 0 or m < k, negative m included. This is the one convention that
/// makes the closed form of count_N agree with direct enumeration
/// (witness: count_N(1,1,1) must be 0, so C(-1,0) must be 0).
BigCount binom(long long m, long long k);

/// Fibonacci numbers with F(0) = 0, F(1) = 1. Throws on negative n.
BigCount fib(long long n);

/// Number of matrices with first row (a, s-a) and last-row second entry b
/// whose rows strictly decrease in the first component while row sums
/// strictly increase. Closed form:
///   0                                   if s - a > b
///   1                                   if s - a = b
///   sum_{k=0}^{a-1} C(b+a-2-s, k)       if s - a < b
/// Total over the integers: s < a, a < 0 or b < 0 give 0.
BigCount count_N(long long a, long long s, long long b);

/// Same count by direct recursive enumeration of the matrices; kept fully
/// independent of count_N. Throws std::invalid_argument when a, b or s - a
/// exceeds depth_cap.
BigCount count_N_oracle(int a, int s, int b, int depth_cap = 12);

/// Number of valid matrices for class sizes (a, b):
///   sum_{i=0}^{a} sum_{k=0}^{i-1} C(b, k+2) + a*b,
/// evaluated with the inner sums regrouped to one pass over k.
BigCount count_G(long long a, long long b);

/// Number of complete simple games with n voters and two voter types:
/// F(n+6) - (n^2 + 4n + 8). Zero for n in {0, 1}.
BigCount count_H_formula(long long n);

/// The same count as sum_{a=1}^{n} count_G(a, n-a).
BigCount count_H_sum(long long n);

} // namespace csg
