// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "csg/analysis.hpp"
#include "csg/counting.hpp"
#include "csg/enumerate.hpp"
#include "csg/oracle.hpp"

using namespace csg;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void(std::string&)> run;  // fills `detail` on failure
};

bool run_all(const std::vector<Criterion>& criteria) {
    bool all_ok = true;
    int id = 0;
    for (const auto& c : criteria) {
        ++id;
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (detail.empty() && seconds > c.budget_seconds) {
            std::ostringstream msg;
            msg << "exceeded budget of " << c.budget_seconds << "s";
            detail = msg.str();
        }
        if (detail.empty()) {
            std::printf("[PASS] %d. %s (%.2fs)\n", id, c.name.c_str(), seconds);
        } else {
            std::printf("[FAIL] %d. %s (%.2fs): %s\n", id, c.name.c_str(), seconds,
                        detail.c_str());
            all_ok = false;
        }
    }
    return all_ok;
}

void check_n_vs_oracle(std::string& detail) {
    for (int a = 0; a <= 8; ++a) {
        for (int s = a; s <= a + 8; ++s) {
            for (int b = 0; b <= 8; ++b) {
                if (count_N(a, s, b) != count_N_oracle(a, s, b)) {
                    std::ostringstream msg;
                    msg << "N(" << a << "," << s << "," << b << ")=" << count_N(a, s, b).str()
                        << " but oracle says " << count_N_oracle(a, s, b).str();
                    detail = msg.str();
                    return;
                }
            }
        }
    }
}

void check_g_identity(std::string& detail) {
    for (long long a = 0; a <= 8; ++a) {
        for (long long b = 0; b <= 8; ++b) {
            BigCount sum;
            for (long long i = 0; i <= a; ++i) {
                for (long long j = 0; j <= b; ++j) {
                    for (long long s = i; s <= i + j; ++s) {
                        sum += count_N(i, s, j);
                    }
                }
            }
            sum -= BigCount(static_cast<std::uint64_t>(a + b + 1));
            if (sum != count_G(a, b)) {
                std::ostringstream msg;
                msg << "G(" << a << "," << b << ")=" << count_G(a, b).str()
                    << " but the N-sum gives " << sum.str();
                detail = msg.str();
                return;
            }
        }
    }
}

void check_h_methods(std::string& detail) {
    for (long long n = 0; n <= 500; ++n) {
        if (count_H_sum(n) != count_H_formula(n)) {
            std::ostringstream msg;
            msg << "H(" << n << "): sum " << count_H_sum(n).str() << " != formula "
                << count_H_formula(n).str();
            detail = msg.str();
            return;
        }
    }
}

void check_enumeration_counts(std::string& detail) {
    for (int n = 2; n <= 16; ++n) {
        std::uint64_t streamed = 0;
        AllEnumerator stream(n);
        while (stream.next()) {
            ++streamed;
        }
        if (BigCount(streamed) != count_H_formula(n)) {
            std::ostringstream msg;
            msg << "enumerate_all(" << n << ") yielded " << streamed << ", formula says "
                << count_H_formula(n).str();
            detail = msg.str();
            return;
        }
    }
}

void check_census(std::string& detail) {
    const std::uint64_t expected_two_types[] = {1, 5, 15, 36};
    const double budgets[] = {10.0, 10.0, 10.0, 300.0};
    for (int n = 2; n <= 5; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const CensusReport report = census(n);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream msg;
        if (report.bucket(true, 2) != expected_two_types[n - 2]) {
            msg << "census(" << n << ") (complete,2)=" << report.bucket(true, 2)
                << ", expected " << expected_two_types[n - 2];
        } else if (BigCount(report.bucket(true, 2)) != count_H_formula(n)) {
            msg << "census(" << n << ") disagrees with the formula";
        } else if (report.bucket(true, 1) != static_cast<std::uint64_t>(n)) {
            msg << "census(" << n << ") (complete,1)=" << report.bucket(true, 1)
                << ", expected " << n;
        } else if (seconds > budgets[n - 2]) {
            msg << "census(" << n << ") took " << seconds << "s, budget " << budgets[n - 2];
        }
        if (!msg.str().empty()) {
            detail = msg.str();
            return;
        }
    }
}

void check_round_trip(std::string& detail) {
    for (int n = 2; n <= 8; ++n) {
        std::uint64_t streamed = 0;
        AllEnumerator stream(n);
        while (auto spec = stream.next()) {
            ++streamed;
            const CompleteGameSpec recovered = parametrize(realize(*spec));
            if (recovered != *spec) {
                std::ostringstream msg;
                msg << "round trip broke at " << *spec << " -> " << recovered;
                detail = msg.str();
                return;
            }
        }
        if (n == 8 && streamed != 273) {
            std::ostringstream msg;
            msg << "expected 273 specs at n=8, saw " << streamed;
            detail = msg.str();
            return;
        }
    }
}

void check_worked_example(std::string& detail) {
    const CompleteGameSpec spec = validate_spec(2, 3, {{2, 0}, {0, 3}});
    const SimpleGame game = realize(spec);
    const std::set<std::set<int>> expected = {{1, 2},    {1, 3, 4}, {1, 3, 5}, {1, 4, 5},
                                              {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5}};
    std::set<std::set<int>> actual;
    for (Coalition s : game.minimal_winning) {
        const auto members = coalition_members(s);
        actual.insert(std::set<int>(members.begin(), members.end()));
    }
    if (actual != expected) {
        detail = "minimal winning coalitions differ from the expected eight";
        return;
    }
    if (min_winning_profiles(spec) != std::vector<Profile>{{0, 3}, {1, 2}, {2, 0}}) {
        detail = "minimal winning profiles differ from {(0,3),(1,2),(2,0)}";
        return;
    }
    const auto winning = winning_profiles(spec);
    const bool has_2_2 =
        std::find(winning.begin(), winning.end(), Profile{2, 2}) != winning.end();
    if (winning.size() != 7 || !has_2_2) {
        // (2,2) delta-dominates (2,0), so it belongs in the winning set.
        detail = "winning profile set is not the expected seven including (2,2)";
        return;
    }
}

void check_identities(std::string& detail) {
    for (long long gamma = 0; gamma <= 30; ++gamma) {
        for (long long beta = gamma; beta <= 30; ++beta) {
            BigCount lhs;
            for (long long alpha = gamma; alpha <= beta; ++alpha) {
                lhs += binom(alpha, gamma);
            }
            if (lhs != binom(beta + 1, gamma + 1)) {
                std::ostringstream msg;
                msg << "hockey stick failed at gamma=" << gamma << ", beta=" << beta;
                detail = msg.str();
                return;
            }
        }
    }
    for (long long m = 0; m <= 200; ++m) {
        BigCount lhs;
        for (long long k = 0; k <= m; ++k) {
            lhs += binom(m - k, k);
        }
        if (lhs != fib(m + 1)) {
            std::ostringstream msg;
            msg << "diagonal identity failed at m=" << m;
            detail = msg.str();
            return;
        }
    }
}

void check_mutation_sensitivity(std::string& detail) {
    // The census recount at n = 2 must reject both nearby corruptions of the
    // closed formula, and accept the true one.
    const int n = 2;
    const CensusReport report = census(n);
    const BigCount observed(report.bucket(true, 2));
    const std::uint64_t poly = static_cast<std::uint64_t>(n) * n + 4 * n + 8;
    if (observed + BigCount(poly) != fib(n + 6)) {
        detail = "true formula no longer matches the census at n=2";
        return;
    }
    if (observed + BigCount(poly) == fib(n + 5)) {
        detail = "mutant F(n+5) was not caught at n=2";
        return;
    }
    if (observed + BigCount(poly - 1) == fib(n + 6)) {
        detail = "mutant polynomial n^2+4n+7 was not caught at n=2";
        return;
    }
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"closed form N(a,s,b) equals the brute-force oracle on the 9x9x9 grid", 5.0,
         check_n_vs_oracle},
        {"G(a,b) equals the triple N-sum minus (a+b+1) for a,b <= 8", 5.0, check_g_identity},
        {"H by summation equals H by formula for n <= 500", 10.0, check_h_methods},
        {"enumeration stream length equals the formula for n <= 16", 30.0,
         check_enumeration_counts},
        {"census buckets: two-type counts 1,5,15,36 and one-type counts n", 310.0,
         check_census},
        {"parametrize inverts realize for every spec up to n = 8", 60.0, check_round_trip},
        {"worked five-voter example reproduces exactly", 5.0, check_worked_example},
        {"hockey-stick and diagonal Fibonacci identities hold", 10.0, check_identities},
        {"census at n = 2 rejects both formula mutants", 10.0, check_mutation_sensitivity},
    };
    return run_all(criteria) ? 0 : 1;
}
