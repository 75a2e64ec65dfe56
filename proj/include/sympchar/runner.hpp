#pragma once

#include <string>
#include <vector>

#include "sympchar/verify.hpp"

namespace sympchar {

struct CasePair {
    unsigned m = 0, f = 0;
};

enum class RunMode { Exhaustive, Sampled };

struct RunConfig {
    std::vector<CasePair> cases;
    std::vector<std::string> checks; // validated subset of all_check_ids()
    RunMode mode = RunMode::Exhaustive;
    std::uint64_t sample_count = 1000;
    std::uint64_t seed = 0;
    std::uint64_t max_enum = kDefaultGroupBound;
    std::uint64_t max_product = kDefaultProductBound;
    std::string format = "table";
    std::string out_path;
    unsigned threads = 0; // 0: pick from SYMPCHAR_THREADS / hardware
};

struct RunResult {
    VerificationReport report;
    std::vector<std::string> notices; // downgrades, degenerate-case skips
    int exit_code = 0;                // 0 pass, 1 check failure
};

const std::vector<std::string>& all_check_ids();

/// Validates the configuration; throws ConfigError on bad input.
void validate_config(const RunConfig& cfg);

/// Runs every selected check on every case. Cases may execute on separate
/// worker threads (capped by SYMPCHAR_THREADS); records are sorted by
/// (case, check id), so the report does not depend on scheduling.
RunResult run_checks(const RunConfig& cfg);

std::string report_to_json_text(const RunConfig& cfg, const RunResult& result);
std::string render_table(const RunResult& result);

} // namespace sympchar
