#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "popc/popcount.hpp"
#include "popc/word.hpp"

namespace popc {

enum class Algo { ref, wegner, tree, gm, nonoblivious };

std::string_view algo_name(Algo a);
std::optional<Algo> algo_from_name(std::string_view name);

/// All five algorithms in canonical order.
const std::vector<Algo>& all_algos();

/// Runs one algorithm; `ref` yields the oracle count with zero stats.
CountResult run_algo(Algo a, const Word& x);

/// Differential verification outcome. Per input, checks every algorithm's
/// count against the reference oracle, the adaptive iteration count against
/// exit_level, and the lowest-set-bit loop's iteration count against the
/// count itself.
struct VerifyOutcome {
    std::uint64_t inputs_checked = 0;
    std::uint64_t count_mismatches = 0;  // inputs where some algorithm missed the oracle
    std::uint64_t adaptive_law_breaks = 0; // nonoblivious iterations != exit_level(count)
    std::uint64_t wegner_law_breaks = 0;   // wegner iterations != count
    std::string first_failure;           // empty when clean

    std::uint64_t law_violations() const {
        return adaptive_law_breaks + wegner_law_breaks;
    }
    bool ok() const { return count_mismatches == 0 && law_violations() == 0; }
};

/// Every algorithm against the oracle on all 2^width values.
/// Requires width a power of two in [4, 24].
VerifyOutcome verify_exhaustive(std::size_t width);

/// Same checks on n seeded uniform random values.
VerifyOutcome verify_random(std::size_t width, std::uint64_t n, std::uint64_t seed);

struct BenchConfig {
    std::vector<std::size_t> widths;
    std::vector<std::uint64_t> ones_values;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::vector<Algo> algos;       // empty means all
    std::string output_path = "-"; // "-" writes to stdout
};

struct CsvRow {
    Algo algo = Algo::ref;
    std::size_t width = 0;
    std::uint64_t ones = 0;
    std::uint64_t trials = 0;
    double mean_iterations = 0;
    std::uint64_t max_iterations = 0;
    double mean_unit_ops = 0;
    std::uint64_t max_unit_ops = 0;
    bool all_correct = false;

    bool operator==(const CsvRow&) const = default;
};

/// Throws std::invalid_argument when the config violates its invariants:
/// widths must be powers of two >= 4, every ones value must fit the
/// smallest width, trials >= 1.
void validate(const BenchConfig& cfg);

/// One row per (algo, width, ones) cell, in config order. Trials within a
/// cell run in parallel; aggregation is order-independent.
std::vector<CsvRow> bench_rows(const BenchConfig& cfg);

void write_csv(std::ostream& out, const BenchConfig& cfg,
               const std::vector<CsvRow>& rows);

// CLI entry points. Exit codes: 0 success, 1 oracle/law mismatch, 2 usage.

struct CountRequest {
    std::string hex;
    std::size_t width = 0;
    Algo algo = Algo::nonoblivious;
    bool trace = false;
};
int run_count(const CountRequest& req, std::ostream& out, std::ostream& err);

struct VerifyRequest {
    std::size_t width = 0;
    bool exhaustive = false;
    std::uint64_t random_n = 0;
    std::uint64_t seed = 0;
};
int run_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err);

int run_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace popc
