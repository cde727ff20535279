// Command-line harness: count ones in one word, differentially verify the
// algorithms against the oracle, or sweep a benchmark grid into CSV.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "popc/harness.hpp"

namespace {

std::vector<popc::Algo> parse_algos(const std::vector<std::string>& names) {
    std::vector<popc::Algo> algos;
    for (const std::string& name : names) {
        const auto algo = popc::algo_from_name(name);
        if (!algo)
            throw CLI::ValidationError("--algos", "unknown algorithm '" + name + "'");
        algos.push_back(*algo);
    }
    return algos;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"popcount algorithm workbench"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "count ones in one word");
    popc::CountRequest count_req;
    std::string algo_name = "nonoblivious";
    count->add_option("--hex", count_req.hex, "input value, hex")->required();
    count->add_option("--width", count_req.width, "word width in bits")->required();
    count->add_option("--algo", algo_name, "ref|wegner|tree|gm|nonoblivious");
    count->add_flag("--trace", count_req.trace, "print one line per loop iteration");

    // verify
    auto* verify = app.add_subcommand("verify", "check all algorithms against the oracle");
    popc::VerifyRequest verify_req;
    auto* exhaustive =
        verify->add_flag("--exhaustive", verify_req.exhaustive, "all 2^width values (width <= 16)");
    auto* random_n =
        verify->add_option("--random", verify_req.random_n, "number of random inputs");
    verify->add_option("--width", verify_req.width, "word width in bits")->required();
    verify->add_option("--seed", verify_req.seed, "random seed");
    exhaustive->excludes(random_n);

    // bench
    auto* bench = app.add_subcommand("bench", "sweep a grid and emit CSV");
    popc::BenchConfig cfg;
    std::vector<std::string> algo_names;
    bench->add_option("--widths", cfg.widths, "word widths")->required()->delimiter(',');
    bench->add_option("--ones", cfg.ones_values, "ones counts")->required()->delimiter(',');
    bench->add_option("--trials", cfg.trials, "trials per cell");
    bench->add_option("--seed", cfg.seed, "random seed");
    bench->add_option("--algos", algo_names, "algorithms (default: all)")->delimiter(',');
    bench->add_option("--out", cfg.output_path, "output CSV path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (count->parsed()) {
        const auto algo = popc::algo_from_name(algo_name);
        if (!algo) {
            std::cerr << "count: unknown algorithm '" << algo_name << "'\n";
            return 2;
        }
        count_req.algo = *algo;
        return popc::run_count(count_req, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        if (!verify_req.exhaustive && verify_req.random_n == 0) {
            std::cerr << "verify: need --exhaustive or --random N\n";
            return 2;
        }
        return popc::run_verify(verify_req, std::cout, std::cerr);
    }
    try {
        cfg.algos = parse_algos(algo_names);
    } catch (const CLI::Error& e) {
        std::cerr << "bench: " << e.what() << "\n";
        return 2;
    }
    return popc::run_bench(cfg, std::cout, std::cerr);
}
