#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympchar/gset.hpp"
#include "sympchar/srg.hpp"

namespace sympchar {

/// One verified identity: what was computed, what the closed form predicts,
/// and which formula the expectation came from.
struct CheckRecord {
    std::string check_id;
    unsigned m = 0, q = 0;
    std::int64_t computed = 0;
    std::int64_t expected = 0;
    std::string provenance;
    bool pass = false;
    double elapsed_ms = 0.0;
    std::string note;
};

struct VerificationReport {
    std::vector<CheckRecord> records;

    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void merge(VerificationReport other);
    std::size_t total() const { return records.size(); }
    std::size_t passed() const;
    std::size_t failed() const { return total() - passed(); }
    bool all_pass() const { return passed() == total(); }
};

enum class VerifyMode { Exhaustive, Sampled };

struct SampleSpec {
    std::size_t count = 1000;
    std::uint64_t seed = 0;
};

/// Shared per-case state so the expensive objects (generator sets with
/// their closure cross-checks, form domains) are built once.
class CaseContext {
public:
    CaseContext(unsigned m, unsigned f, std::uint64_t enum_bound = kDefaultEnumBound,
                std::uint64_t group_bound = kDefaultGroupBound);

    const Field& field() const { return gf_; }
    const Space& space() const { return sp_; }
    unsigned m() const { return sp_.m(); }
    unsigned q() const { return gf_.size(); }
    std::uint64_t group_bound() const { return group_bound_; }

    const GeneratorSet& sp_gens();
    const GeneratorSet& stabilizer_gens();   // G_v for v = e1
    const GeneratorSet& oplus_gens();
    const GeneratorSet& ominus_gens();
    const GroupElements& sp_elements();      // full enumeration, cached
    const GSet& vectors();
    const GSet& forms_plus();
    const GSet& forms_minus();
    const GSet& lines();

private:
    Field gf_;
    Space sp_;
    std::uint64_t enum_bound_, group_bound_;
    std::optional<GeneratorSet> sp_gens_, gv_gens_, oplus_gens_, ominus_gens_;
    std::optional<GroupElements> sp_elements_;
    std::optional<GSet> vectors_, forms_plus_, forms_minus_, lines_;
};

// Identity checks. Each returns the records it produced; none of them throw
// on a mere mismatch (mismatches are recorded as failures), only on
// inability to compute (bounds, degenerate cases).

/// Field sanity: axioms, Frobenius, trace kernel, Artin-Schreier image size.
VerificationReport verify_field(const Field& gf);

/// Orbit count of the vector stabilizer on the nonzero vectors (= 2q - 1).
VerificationReport verify_eq1(CaseContext& cx);

/// <pi^eps, pi^eps> = q/2 + 1 for both types.
VerificationReport verify_eq2(CaseContext& cx, std::uint64_t max_product = kDefaultProductBound);

/// <pi^+, pi^-> = q/2.
VerificationReport verify_eq3(CaseContext& cx, std::uint64_t max_product = kDefaultProductBound);

/// <pi_0, pi^eps> = q for both types.
VerificationReport verify_eq4(CaseContext& cx, std::uint64_t max_product = kDefaultProductBound);

/// Orbit structure: stabilizer orbit classes on the nonzero vectors, level
/// sets as orthogonal-group orbits, and the O- orbit count on the plus forms.
VerificationReport verify_orbit_structure(CaseContext& cx);

/// Pointwise 1 + pi_0(g) = pi^+(g) + pi^-(g) over the whole group or a
/// seeded sample. Any failing element is quoted in the record note.
VerificationReport verify_theorem(CaseContext& cx, VerifyMode mode, const SampleSpec& sample = {});

/// Every element fixes at least one quadratic form.
VerificationReport verify_corollary(CaseContext& cx, VerifyMode mode,
                                    const SampleSpec& sample = {});

/// SRG parameters, chi degrees, and the rank-3 inner product.
VerificationReport verify_srg_suite(CaseContext& cx);
VerificationReport verify_rank3_check(CaseContext& cx,
                                      std::uint64_t max_product = kDefaultProductBound);

/// Exact integer degree bookkeeping tying |Omega^eps| to 1 + chi(1) + pi'(1).
VerificationReport verify_degree_identities(CaseContext& cx);

} // namespace sympchar
