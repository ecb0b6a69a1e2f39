#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "csg/analysis.hpp"
#include "csg/counting.hpp"
#include "csg/enumerate.hpp"
#include "csg/io.hpp"
#include "csg/oracle.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

int run_count(long long n, const std::string& method) {
    if (method == "formula") {
        if (n > 100000) {
            throw csg::Error("count --method formula supports n <= 100000");
        }
        std::cout << csg::count_H_formula(n).str() << '\n';
    } else if (method == "sum") {
        if (n > 2000) {
            throw csg::Error("count --method sum supports n <= 2000");
        }
        std::cout << csg::count_H_sum(n).str() << '\n';
    } else {  // enumerate
        if (n > 24) {
            throw csg::Error("count --method enumerate supports n <= 24");
        }
        std::uint64_t total = 0;
        if (n >= 2) {
            csg::AllEnumerator stream(static_cast<int>(n));
            while (stream.next()) {
                ++total;
            }
        }
        std::cout << total << '\n';
    }
    return 0;
}

void print_spec(const csg::CompleteGameSpec& spec, const std::string& format) {
    if (format == "csv") {
        std::cout << csg::io::spec_to_csv(spec) << '\n';
    } else {
        std::cout << csg::io::spec_to_json(spec).dump() << '\n';
    }
}

int run_enumerate(int n, int split, const std::string& format, long long limit) {
    long long emitted = 0;
    auto emit = [&](const csg::CompleteGameSpec& spec) {
        if (limit >= 0 && emitted >= limit) {
            return false;
        }
        print_spec(spec, format);
        ++emitted;
        return true;
    };
    if (split > 0) {
        if (split >= n) {
            throw csg::Error("--split must be between 1 and n-1");
        }
        csg::SplitEnumerator stream(split, n - split);
        while (auto spec = stream.next()) {
            if (!emit(*spec)) {
                break;
            }
        }
    } else {
        csg::AllEnumerator stream(n);
        while (auto spec = stream.next()) {
            if (!emit(*spec)) {
                break;
            }
        }
    }
    return 0;
}

int run_inspect(int n1, int n2, const std::string& matrix_text) {
    const csg::CompleteGameSpec spec =
        csg::validate_spec(n1, n2, csg::io::parse_matrix_text(matrix_text));
    if (spec.voters() > csg::kMaxGameVoters) {
        throw csg::Error("inspect materializes the game; n1+n2 <= 20 required");
    }
    std::cout << csg::io::inspect_report(spec).dump() << '\n';
    return 0;
}

int run_classify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw csg::Error("cannot open " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw csg::Error(std::string("malformed game JSON: ") + e.what());
    }
    const csg::SimpleGame game = csg::io::game_from_json(j);
    std::cout << csg::io::classification_to_json(game, csg::classify(game)).dump() << '\n';
    return 0;
}

int run_verify(int n_max) {
    const csg::CrossCheckReport report = csg::cross_check(n_max);
    std::printf("%4s %9s %9s %8s %8s %10s  %s\n", "n", "labeled", "iso_cls", "cmp1t",
                "cmp2t", "H_formula", "status");
    for (const auto& row : report.rows) {
        auto cell = [](std::int64_t v) { return v < 0 ? std::string("-") : std::to_string(v); };
        std::printf("%4d %9s %9s %8s %8s %10s  %s\n", row.n, cell(row.labeled).c_str(),
                    cell(row.iso_classes).c_str(), cell(row.complete_one_type).c_str(),
                    cell(row.complete_two_types).c_str(), row.h_formula.str().c_str(),
                    row.ok ? "OK" : "MISMATCH");
        if (!row.ok) {
            std::printf("     ^ %s\n", row.note.c_str());
        }
    }
    return report.ok ? 0 : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complete simple games with two types of voters"};
    app.require_subcommand(1);

    long long count_n = 0;
    std::string count_method = "formula";
    auto* count = app.add_subcommand("count", "print H(n), the number of games on n voters");
    count->add_option("n", count_n, "number of voters")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--method", count_method, "formula|sum|enumerate")
        ->check(CLI::IsMember({"formula", "sum", "enumerate"}));

    int enum_n = 0;
    int enum_split = 0;
    long long enum_limit = -1;
    std::string enum_format = "jsonl";
    auto* enumerate = app.add_subcommand("enumerate", "stream every spec for n voters");
    enumerate->add_option("n", enum_n, "number of voters (2..24)")
        ->required()
        ->check(CLI::Range(2, 24));
    enumerate->add_option("--split", enum_split, "restrict to the split (n1, n-n1)")
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--format", enum_format, "jsonl|csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    enumerate->add_option("--limit", enum_limit, "stop after this many specs")
        ->check(CLI::NonNegativeNumber);

    int inspect_n1 = 0;
    int inspect_n2 = 0;
    std::string inspect_matrix;
    auto* inspect = app.add_subcommand("inspect", "report profiles and coalitions of one spec");
    inspect->add_option("--n1", inspect_n1, "size of the stronger class")->required();
    inspect->add_option("--n2", inspect_n2, "size of the weaker class")->required();
    inspect->add_option("--matrix", inspect_matrix, "rows as \"m11,m12;m21,m22;...\"")->required();

    std::string classify_path;
    auto* classify = app.add_subcommand("classify", "classify an explicit game JSON file");
    classify->add_option("file", classify_path, "game JSON file")->required();

    int verify_n = 0;
    auto* verify = app.add_subcommand("verify", "cross-check census, enumeration and formula");
    verify->add_option("n_max", verify_n, "largest n to verify (2..16)")
        ->required()
        ->check(CLI::Range(2, 16));

    long long fib_n = 0;
    auto* fib_cmd = app.add_subcommand("fib", "print the n-th Fibonacci number");
    fib_cmd->add_option("n", fib_n, "index (0..100000)")
        ->required()
        ->check(CLI::Range(0ll, 100000ll));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (count->parsed()) {
            return run_count(count_n, count_method);
        }
        if (enumerate->parsed()) {
            return run_enumerate(enum_n, enum_split, enum_format, enum_limit);
        }
        if (inspect->parsed()) {
            return run_inspect(inspect_n1, inspect_n2, inspect_matrix);
        }
        if (classify->parsed()) {
            return run_classify(classify_path);
        }
        if (verify->parsed()) {
            return run_verify(verify_n);
        }
        if (fib_cmd->parsed()) {
            std::cout << csg::fib(fib_n).str() << '\n';
            return 0;
        }
    } catch (const csg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
