#include "popc/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "popc/input_gen.hpp"

namespace popc {

namespace {

constexpr unsigned kCountMismatch = 1u;
constexpr unsigned kAdaptiveLawBreak = 2u;
constexpr unsigned kWegnerLawBreak = 4u;

bool is_pow2(std::size_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

// Bitmask of failure kinds for one input; fills `why` when non-null.
unsigned check_input(const Word& x, std::string* why) {
    const std::uint64_t expect = popcount_reference(x);
    unsigned flags = 0;
    for (Algo a : {Algo::wegner, Algo::tree, Algo::gm, Algo::nonoblivious}) {
        const CountResult r = run_algo(a, x);
        if (r.count != expect) {
            flags |= kCountMismatch;
            if (why && why->empty()) {
                std::ostringstream os;
                os << "x=" << x.to_hex() << " algo=" << algo_name(a)
                   << " got=" << r.count << " expected=" << expect;
                *why = os.str();
            }
        }
        bool law_ok = true;
        if (a == Algo::wegner) {
            law_ok = r.stats.iterations == expect;
            if (!law_ok)
                flags |= kWegnerLawBreak;
        } else if (a == Algo::nonoblivious) {
            law_ok = x.is_zero() ? r.stats.iterations == 0
                                 : r.stats.iterations == exit_level(expect);
            if (!law_ok)
                flags |= kAdaptiveLawBreak;
        }
        if (!law_ok && why && why->empty()) {
            std::ostringstream os;
            os << "x=" << x.to_hex() << " algo=" << algo_name(a)
               << " iterations=" << r.stats.iterations
               << " violate the iteration law (count=" << expect << ")";
            *why = os.str();
        }
    }
    return flags;
}

std::string format_mean(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

std::string_view algo_name(Algo a) {
    switch (a) {
    case Algo::ref: return "ref";
    case Algo::wegner: return "wegner";
    case Algo::tree: return "tree";
    case Algo::gm: return "gm";
    case Algo::nonoblivious: return "nonoblivious";
    }
    return "?";
}

std::optional<Algo> algo_from_name(std::string_view name) {
    for (Algo a : all_algos())
        if (name == algo_name(a))
            return a;
    return std::nullopt;
}

const std::vector<Algo>& all_algos() {
    static const std::vector<Algo> algos = {Algo::ref, Algo::wegner, Algo::tree,
                                            Algo::gm, Algo::nonoblivious};
    return algos;
}

CountResult run_algo(Algo a, const Word& x) {
    switch (a) {
    case Algo::ref: {
        CountResult r;
        r.count = popcount_reference(x);
        return r;
    }
    case Algo::wegner: return popcount_wegner(x);
    case Algo::tree: return popcount_tree(x);
    case Algo::gm: return popcount_gm_oblivious(x);
    case Algo::nonoblivious: return popcount_nonoblivious(x);
    }
    throw std::logic_error("run_algo: bad algorithm");
}

VerifyOutcome verify_exhaustive(std::size_t width) {
    if (!is_pow2(width) || width < 4 || width > 24)
        throw std::invalid_argument("verify_exhaustive: width must be a power of two in [4, 24]");

    const long long n = 1ll << width;
    long long first = n;
    std::uint64_t count_bad = 0;
    std::uint64_t adaptive_bad = 0;
    std::uint64_t wegner_bad = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) \
    reduction(+ : count_bad, adaptive_bad, wegner_bad) reduction(min : first)
#endif
    for (long long v = 0; v < n; ++v) {
        const unsigned flags =
            check_input(Word(static_cast<std::uint64_t>(v), width), nullptr);
        if (flags != 0) {
            count_bad += (flags & kCountMismatch) != 0;
            adaptive_bad += (flags & kAdaptiveLawBreak) != 0;
            wegner_bad += (flags & kWegnerLawBreak) != 0;
            first = std::min(first, v);
        }
    }

    VerifyOutcome out;
    out.inputs_checked = static_cast<std::uint64_t>(n);
    out.count_mismatches = count_bad;
    out.adaptive_law_breaks = adaptive_bad;
    out.wegner_law_breaks = wegner_bad;
    if (first < n)
        check_input(Word(static_cast<std::uint64_t>(first), width), &out.first_failure);
    return out;
}

VerifyOutcome verify_random(std::size_t width, std::uint64_t n, std::uint64_t seed) {
    if (!is_pow2(width) || width < 4)
        throw std::invalid_argument("verify_random: width must be a power of two >= 4");

    const long long count = static_cast<long long>(n);
    long long first = count;
    std::uint64_t count_bad = 0;
    std::uint64_t adaptive_bad = 0;
    std::uint64_t wegner_bad = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) \
    reduction(+ : count_bad, adaptive_bad, wegner_bad) reduction(min : first)
#endif
    for (long long i = 0; i < count; ++i) {
        const Word x = gen_uniform(width, mix_seed(seed, width, static_cast<std::uint64_t>(i), 0));
        const unsigned flags = check_input(x, nullptr);
        if (flags != 0) {
            count_bad += (flags & kCountMismatch) != 0;
            adaptive_bad += (flags & kAdaptiveLawBreak) != 0;
            wegner_bad += (flags & kWegnerLawBreak) != 0;
            first = std::min(first, i);
        }
    }

    VerifyOutcome out;
    out.inputs_checked = n;
    out.count_mismatches = count_bad;
    out.adaptive_law_breaks = adaptive_bad;
    out.wegner_law_breaks = wegner_bad;
    if (first < count) {
        const Word x =
            gen_uniform(width, mix_seed(seed, width, static_cast<std::uint64_t>(first), 0));
        check_input(x, &out.first_failure);
    }
    return out;
}

void validate(const BenchConfig& cfg) {
    if (cfg.widths.empty())
        throw std::invalid_argument("need at least one width");
    for (std::size_t w : cfg.widths)
        if (!is_pow2(w) || w < 4)
            throw std::invalid_argument("widths must be powers of two >= 4");
    const std::size_t min_width = *std::min_element(cfg.widths.begin(), cfg.widths.end());
    for (std::uint64_t ones : cfg.ones_values)
        if (ones > min_width)
            throw std::invalid_argument("ones value exceeds the smallest width");
    if (cfg.ones_values.empty())
        throw std::invalid_argument("need at least one ones value");
    if (cfg.trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    if (cfg.output_path.empty())
        throw std::invalid_argument("empty output path");
}

namespace {

CsvRow bench_cell(Algo algo, std::size_t width, std::uint64_t ones,
                  const BenchConfig& cfg) {
    const long long trials = static_cast<long long>(cfg.trials);
    std::uint64_t sum_iters = 0, sum_ops = 0, bad = 0;
    std::uint64_t max_iters = 0, max_ops = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) \
    reduction(+ : sum_iters, sum_ops, bad) reduction(max : max_iters, max_ops)
#endif
    for (long long t = 0; t < trials; ++t) {
        const Word x = gen_input(
            width, ones, mix_seed(cfg.seed, width, ones, static_cast<std::uint64_t>(t)));
        const CountResult r = run_algo(algo, x);
        if (r.count != popcount_reference(x))
            bad += 1;
        sum_iters += r.stats.iterations;
        sum_ops += r.stats.total_unit_ops();
        max_iters = std::max(max_iters, r.stats.iterations);
        max_ops = std::max(max_ops, r.stats.total_unit_ops());
    }

    CsvRow row;
    row.algo = algo;
    row.width = width;
    row.ones = ones;
    row.trials = cfg.trials;
    row.mean_iterations = static_cast<double>(sum_iters) / static_cast<double>(cfg.trials);
    row.max_iterations = max_iters;
    row.mean_unit_ops = static_cast<double>(sum_ops) / static_cast<double>(cfg.trials);
    row.max_unit_ops = max_ops;
    row.all_correct = bad == 0;
    return row;
}

} // namespace

std::vector<CsvRow> bench_rows(const BenchConfig& cfg) {
    validate(cfg);
    const std::vector<Algo>& algos = cfg.algos.empty() ? all_algos() : cfg.algos;
    std::vector<CsvRow> rows;
    rows.reserve(algos.size() * cfg.widths.size() * cfg.ones_values.size());
    for (Algo algo : algos)
        for (std::size_t width : cfg.widths)
            for (std::uint64_t ones : cfg.ones_values)
                rows.push_back(bench_cell(algo, width, ones, cfg));
    return rows;
}

void write_csv(std::ostream& out, const BenchConfig& cfg,
               const std::vector<CsvRow>& rows) {
    out << "# seed=" << cfg.seed << " generator=" << kGeneratorId
        << " trials=" << cfg.trials << "\n";
    out << "algo,width,ones,trials,mean_iterations,max_iterations,"
           "mean_unit_ops,max_unit_ops,all_correct\n";
    for (const CsvRow& r : rows) {
        out << algo_name(r.algo) << ',' << r.width << ',' << r.ones << ','
            << r.trials << ',' << format_mean(r.mean_iterations) << ','
            << r.max_iterations << ',' << format_mean(r.mean_unit_ops) << ','
            << r.max_unit_ops << ',' << (r.all_correct ? "true" : "false")
            << '\n';
    }
}

int run_count(const CountRequest& req, std::ostream& out, std::ostream& err) {
    Word x(1);
    try {
        x = Word::from_hex(req.hex, req.width);
    } catch (const std::exception& e) {
        err << "count: " << e.what() << "\n";
        return 2;
    }
    try {
        CountResult r;
        if (req.algo == Algo::nonoblivious && req.trace) {
            r = popcount_nonoblivious(x, true);
            for (const TraceStep& step : *r.trace)
                out << "k=" << step.level << " x=" << step.x_after.to_hex()
                    << " p=" << step.p_after.to_hex()
                    << " guard=" << (step.guard ? "true" : "false") << "\n";
        } else {
            r = run_algo(req.algo, x);
        }
        out << "count=" << r.count << " iterations=" << r.stats.iterations
            << " unit_ops=" << r.stats.total_unit_ops() << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "count: " << e.what() << "\n";
        return 2;
    }
}

int run_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err) {
    if (req.exhaustive && req.width > 16) {
        err << "verify: --exhaustive supports widths up to 16\n";
        return 2;
    }
    VerifyOutcome outcome;
    try {
        outcome = req.exhaustive ? verify_exhaustive(req.width)
                                 : verify_random(req.width, req.random_n, req.seed);
    } catch (const std::exception& e) {
        err << "verify: " << e.what() << "\n";
        return 2;
    }
    out << (outcome.inputs_checked - outcome.count_mismatches) << "/"
        << outcome.inputs_checked << " values, 4 algorithms, iteration law: "
        << (outcome.law_violations() == 0 ? "pass" : "fail") << "\n";
    if (!outcome.ok()) {
        out << "first counterexample: " << outcome.first_failure << "\n";
        return 1;
    }
    return 0;
}

int run_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        validate(cfg);
    } catch (const std::exception& e) {
        err << "bench: " << e.what() << "\n";
        return 2;
    }
    const std::vector<CsvRow> rows = bench_rows(cfg);

    if (cfg.output_path == "-") {
        write_csv(out, cfg, rows);
    } else {
        std::ofstream file(cfg.output_path);
        if (!file) {
            err << "bench: cannot open '" << cfg.output_path << "' for writing\n";
            return 2;
        }
        write_csv(file, cfg, rows);
        if (!file.good()) {
            err << "bench: error writing '" << cfg.output_path << "'\n";
            return 2;
        }
    }

    for (const CsvRow& r : rows)
        if (!r.all_correct)
            return 1;
    return 0;
}

} // namespace popc
