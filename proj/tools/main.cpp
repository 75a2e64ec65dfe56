// Command-line verification harness: runs the identity checks for the
// symplectic/orthogonal permutation actions per (m, f) case and reports
// computed vs expected values as a table or JSON.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sympchar/runner.hpp"

namespace {

std::vector<std::string> split_checks(const std::string& arg) {
    if (arg == "all") return sympchar::all_check_ids();
    std::vector<std::string> out;
    std::string cur;
    for (char c : arg) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verify permutation-character identities for Sp_2m(2^f)"};

    std::vector<unsigned> ms, fs;
    std::string checks_arg = "all";
    std::string mode_arg = "exhaustive";
    sympchar::RunConfig cfg;
    bool seed_given = false;

    app.add_option("--m", ms, "half-dimension m (repeat to add cases)");
    app.add_option("--f", fs, "field degree f, q = 2^f (repeat to add cases)");
    app.add_option("--checks", checks_arg,
                   "comma-separated subset of: fields,orbits,eq1,eq2,eq3,eq4,rank3,srg,"
                   "degrees,theorem,corollary (or 'all')");
    app.add_option("--mode", mode_arg, "exhaustive | sampled");
    app.add_option("--count", cfg.sample_count, "sample size for sampled mode");
    auto* seed_opt = app.add_option("--seed", cfg.seed, "seed for sampled mode");
    app.add_option("--format", cfg.format, "table | json");
    app.add_option("--max-enum", cfg.max_enum, "group enumeration bound");
    app.add_option("--max-product", cfg.max_product, "product domain bound");
    app.add_option("--out", cfg.out_path, "write the JSON report to this file");
    app.add_option("--threads", cfg.threads, "worker cap (SYMPCHAR_THREADS also caps)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError&) {
        std::cerr << app.help();
        return 2;
    }
    seed_given = seed_opt->count() > 0;

    try {
        if (ms.size() != fs.size())
            throw sympchar::ConfigError("--m and --f must be given the same number of times");
        for (std::size_t i = 0; i < ms.size(); ++i) cfg.cases.push_back({ms[i], fs[i]});
        cfg.checks = split_checks(checks_arg);
        if (mode_arg == "exhaustive") {
            cfg.mode = sympchar::RunMode::Exhaustive;
        } else if (mode_arg == "sampled") {
            cfg.mode = sympchar::RunMode::Sampled;
            if (!seed_given)
                throw sympchar::ConfigError("sampled mode requires an explicit --seed");
        } else {
            throw sympchar::ConfigError("mode must be 'exhaustive' or 'sampled'");
        }
        sympchar::validate_config(cfg);
    } catch (const sympchar::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        const sympchar::RunResult result = sympchar::run_checks(cfg);
        for (const auto& n : result.notices) std::cerr << "notice: " << n << "\n";

        const std::string json_text = sympchar::report_to_json_text(cfg, result);
        if (cfg.format == "json")
            std::cout << json_text;
        else
            std::cout << sympchar::render_table(result);

        if (!cfg.out_path.empty()) {
            std::ofstream out(cfg.out_path);
            if (!out) {
                std::cerr << "error: cannot write " << cfg.out_path << "\n";
                return 2;
            }
            out << json_text;
        }
        return result.exit_code;
    } catch (const sympchar::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
