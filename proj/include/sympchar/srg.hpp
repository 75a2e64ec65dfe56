#pragma once

#include <cstdint>

#include "sympchar/gset.hpp"

namespace sympchar {

struct SrgParams {
    std::uint64_t v = 0, k = 0, lam = 0, mu = 0;
    bool operator==(const SrgParams&) const = default;
};

/// Integer eigenvalues r > s of a strongly regular graph together with
/// their multiplicities; mult_r + mult_s = v - 1 and the trace condition
/// k + mult_r * r + mult_s * s = 0 are enforced.
struct SpectrumMultiplicities {
    std::int64_t r = 0, s = 0;
    std::uint64_t mult_r = 0, mult_s = 0;
};

struct ChiDegrees {
    std::uint64_t chi_minus = 0; // smaller degree
    std::uint64_t chi_plus = 0;
};

/// Graph on the 1-subspaces, joining perpendicular distinct lines.
class PerpGraph {
public:
    static PerpGraph build(const Space& sp, std::uint64_t bound = kDefaultEnumBound);

    std::size_t num_vertices() const { return n_; }
    bool adjacent(std::size_t a, std::size_t b) const {
        return (rows_[a * words_ + b / 64] >> (b % 64)) & 1u;
    }
    std::size_t degree(std::size_t a) const;
    std::size_t common_neighbors(std::size_t a, std::size_t b) const;

private:
    std::size_t n_ = 0, words_ = 0;
    std::vector<std::uint64_t> rows_; // adjacency bitmap, n_ x words_
};

/// Parameters from the formulas ((q^2m - 1)/(q-1), (q^(2m-1) - q)/(q-1),
/// (q^(2m-2) - 1)/(q-1) - 2, (q^(2m-2) - 1)/(q-1)).
SrgParams expected_srg_params(unsigned m, unsigned q);

/// Measures (v, k, lam, mu) on the built graph by direct counting and
/// checks regularity along the way. m = 1 is refused (edgeless graph).
SrgParams verify_srg(const Space& sp);

/// Eigenvalue multiplicities in exact integer arithmetic.
SpectrumMultiplicities spectrum_multiplicities(const SrgParams& p);

/// Degrees of the two nontrivial rank-3 constituents, from the measured
/// graph, cross-checked against ((q^(2m) - q)/(q-1) -+ q^m)/2.
ChiDegrees chi_degrees(const Space& sp);

/// <pi_lines, pi_lines>; equals 3 exactly when the action is rank 3.
std::uint64_t verify_rank3(const Space& sp, const GeneratorSet& sp_gens,
                           std::uint64_t max_product = kDefaultProductBound);

} // namespace sympchar
