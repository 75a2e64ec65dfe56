#include "sympchar/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace sympchar {

namespace {

// canonical execution order: cheap structure first, group sweeps last
const std::vector<std::string> kAllChecks = {
    "fields", "orbits", "eq1", "eq2", "eq3", "eq4",
    "rank3",  "srg",    "degrees", "theorem", "corollary",
};

// checks that presume a vector orthogonal to v outside <v>, so m >= 2
bool needs_rank3_scale(const std::string& id) {
    return id == "orbits" || id == "eq1" || id == "eq2" || id == "eq3" || id == "eq4" ||
           id == "rank3" || id == "srg" || id == "degrees";
}

unsigned resolve_threads(const RunConfig& cfg, std::size_t cases) {
    unsigned t = cfg.threads;
    if (t == 0) {
        t = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("SYMPCHAR_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) t = std::min<unsigned>(t, static_cast<unsigned>(v));
        }
    }
    return std::min<unsigned>(t, static_cast<unsigned>(std::max<std::size_t>(cases, 1)));
}

struct CaseOutput {
    VerificationReport report;
    std::vector<std::string> notices;
};

CaseOutput run_case(const CasePair& cs, const RunConfig& cfg) {
    CaseOutput out;
    CaseContext cx(cs.m, cs.f, kDefaultEnumBound, cfg.max_enum);
    const std::string tag =
        "case m=" + std::to_string(cs.m) + " q=" + std::to_string(cx.q()) + ": ";

    for (const std::string& id : kAllChecks) {
        if (std::find(cfg.checks.begin(), cfg.checks.end(), id) == cfg.checks.end()) continue;
        if (cs.m == 1 && needs_rank3_scale(id)) {
            out.notices.push_back(tag + "skipping '" + id + "' (degenerate at m=1)");
            continue;
        }
        try {
            if (id == "fields") {
                auto rep = verify_field(cx.field());
                for (auto& r : rep.records) r.m = cs.m; // tie to the case for sorting
                out.report.merge(std::move(rep));
            } else if (id == "orbits") {
                out.report.merge(verify_orbit_structure(cx));
            } else if (id == "eq1") {
                out.report.merge(verify_eq1(cx));
            } else if (id == "eq2") {
                out.report.merge(verify_eq2(cx, cfg.max_product));
            } else if (id == "eq3") {
                out.report.merge(verify_eq3(cx, cfg.max_product));
            } else if (id == "eq4") {
                out.report.merge(verify_eq4(cx, cfg.max_product));
            } else if (id == "rank3") {
                out.report.merge(verify_rank3_check(cx, cfg.max_product));
            } else if (id == "srg") {
                out.report.merge(verify_srg_suite(cx));
            } else if (id == "degrees") {
                out.report.merge(verify_degree_identities(cx));
            } else if (id == "theorem" || id == "corollary") {
                VerifyMode mode =
                    cfg.mode == RunMode::Exhaustive ? VerifyMode::Exhaustive : VerifyMode::Sampled;
                SampleSpec sample{cfg.sample_count, cfg.seed};
                if (mode == VerifyMode::Exhaustive &&
                    sp_order(cs.m, cx.q()) > cfg.max_enum) {
                    mode = VerifyMode::Sampled;
                    out.notices.push_back(tag + "'" + id + "' downgraded to sampled(" +
                                          std::to_string(sample.count) + ", seed " +
                                          std::to_string(sample.seed) +
                                          "): group order exceeds the enumeration bound");
                }
                out.report.merge(id == "theorem" ? verify_theorem(cx, mode, sample)
                                                 : verify_corollary(cx, mode, sample));
            }
        } catch (const Error& e) {
            CheckRecord r;
            r.check_id = id + ".error";
            r.m = cs.m;
            r.q = cx.q();
            r.computed = 0;
            r.expected = 1;
            r.provenance = "check must complete";
            r.pass = false;
            r.note = e.what();
            out.report.add(std::move(r));
        }
    }
    return out;
}

} // namespace

const std::vector<std::string>& all_check_ids() { return kAllChecks; }

void validate_config(const RunConfig& cfg) {
    if (cfg.cases.empty()) throw ConfigError("no (m, f) cases given");
    for (const auto& cs : cfg.cases) {
        if (cs.m < 1 || cs.m > 4) throw ConfigError("m must be between 1 and 4");
        if (cs.f < 1 || cs.f > 8) throw ConfigError("f must be between 1 and 8");
    }
    if (cfg.checks.empty()) throw ConfigError("no checks selected");
    for (const auto& id : cfg.checks)
        if (std::find(kAllChecks.begin(), kAllChecks.end(), id) == kAllChecks.end())
            throw ConfigError("unknown check '" + id + "'");
    if (cfg.format != "table" && cfg.format != "json")
        throw ConfigError("format must be 'table' or 'json'");
    if (cfg.sample_count < 1) throw ConfigError("sample count must be at least 1");
}

RunResult run_checks(const RunConfig& cfg) {
    validate_config(cfg);

    std::vector<CaseOutput> outputs(cfg.cases.size());
    const unsigned workers = resolve_threads(cfg, cfg.cases.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < cfg.cases.size(); ++i) outputs[i] = run_case(cfg.cases[i], cfg);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= cfg.cases.size()) return;
                    outputs[i] = run_case(cfg.cases[i], cfg);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    RunResult result;
    for (auto& out : outputs) {
        result.report.merge(std::move(out.report));
        for (auto& n : out.notices) result.notices.push_back(std::move(n));
    }
    std::stable_sort(result.report.records.begin(), result.report.records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) {
                         return std::tie(a.m, a.q, a.check_id) < std::tie(b.m, b.q, b.check_id);
                     });
    result.exit_code = result.report.all_pass() ? 0 : 1;
    return result;
}

std::string report_to_json_text(const RunConfig& cfg, const RunResult& result) {
    nlohmann::json j;
    j["version"] = 1;

    nlohmann::json cases = nlohmann::json::array();
    for (const auto& cs : cfg.cases) cases.push_back({{"m", cs.m}, {"f", cs.f}});
    j["config"] = {
        {"cases", cases},
        {"checks", cfg.checks},
        {"mode", cfg.mode == RunMode::Exhaustive ? "exhaustive" : "sampled"},
        {"count", cfg.sample_count},
        {"seed", cfg.seed},
        {"max_enum", cfg.max_enum},
        {"max_product", cfg.max_product},
        {"format", cfg.format},
    };

    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : result.report.records) {
        records.push_back({
            {"check_id", r.check_id},
            {"m", r.m},
            {"q", r.q},
            {"computed", r.computed},
            {"expected", r.expected},
            {"provenance", r.provenance},
            {"pass", r.pass},
            {"elapsed_ms", r.elapsed_ms},
            {"note", r.note},
        });
    }
    j["records"] = records;
    j["summary"] = {{"total", result.report.total()},
                    {"passed", result.report.passed()},
                    {"failed", result.report.failed()}};
    return j.dump(2) + "\n";
}

std::string render_table(const RunResult& result) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "case" << std::setw(28) << "check" << std::right
       << std::setw(14) << "computed" << std::setw(14) << "expected" << "  " << std::left
       << std::setw(6) << "status" << "elapsed\n";
    for (const auto& r : result.report.records) {
        std::ostringstream cs;
        cs << "m=" << r.m << " q=" << r.q;
        os << std::left << std::setw(10) << cs.str() << std::setw(28) << r.check_id << std::right
           << std::setw(14) << r.computed << std::setw(14) << r.expected << "  " << std::left
           << std::setw(6) << (r.pass ? "ok" : "FAIL") << std::fixed << std::setprecision(1)
           << r.elapsed_ms << " ms";
        if (!r.note.empty()) os << "  (" << r.note << ")";
        os << "\n";
    }
    os << result.report.total() << " checks, " << result.report.passed() << " passed, "
       << result.report.failed() << " failed\n";
    return os.str();
}

} // namespace sympchar
