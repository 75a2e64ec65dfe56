#pragma once

#include <cstdint>
#include <vector>

#include "sympchar/group.hpp"

namespace sympchar {

inline constexpr std::uint64_t kDefaultProductBound = 20'000'000;

/// A group element prepared for domain actions: carries the inverse (forms
/// transform through it) and the squared inverse rows used to push a
/// diagonal through the action in one pass.
struct PreparedElement {
    Mat g;
    Mat ginv;
    std::array<Fe, Mat::kMaxDim> qplus_on_inv_rows{}; // Q+(row_j(g^-1))
    std::array<Fe, Mat::kMaxDim * Mat::kMaxDim> sq_inv{}; // ginv(j,i)^2
};

/**
 * An indexed finite domain with a symplectic group action:
 *   - the nonzero vectors of V, acting by v -> v g
 *   - the quadratic forms of one type, acting by Q -> Q∘g^{-1}
 *   - the 1-subspaces, via canonical representatives
 * Indices are dense and canonical (ascending packed keys), which makes
 * fixed-point counting and Schreier-style orbit walks cheap.
 */
class GSet {
public:
    enum class Kind { NonzeroVectors, FormsPlus, FormsMinus, Lines };

    static GSet nonzero_vectors(const Space& sp, std::uint64_t bound = kDefaultEnumBound);
    static GSet forms(const Space& sp, FormType type, std::uint64_t bound = kDefaultEnumBound);
    static GSet lines(const Space& sp, std::uint64_t bound = kDefaultEnumBound);

    Kind kind() const { return kind_; }
    const Space& space() const { return *sp_; }
    std::size_t size() const { return size_; }

    /// Canonical object at an index (vectors and lines).
    Vec vector_at(std::size_t i) const;
    /// Canonical object at an index (form domains).
    QuadraticForm form_at(std::size_t i) const;

    std::size_t index_of_vector(const Vec& v) const;
    std::size_t index_of_form(const QuadraticForm& q) const;

    PreparedElement prepare(const Mat& g) const;
    std::size_t apply(std::size_t idx, const PreparedElement& pe) const;

    /// Image table of the whole domain under one element.
    std::vector<std::uint32_t> permutation(const Mat& g) const;

private:
    GSet(const Space& sp, Kind kind);

    const Space* sp_;
    Kind kind_;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> keys_;      // forms: packed diagonals; lines: packed reps
    std::vector<std::int32_t> lookup_;     // packed key -> index (-1 when absent)
};

/// Number of domain points fixed by g; the permutation-character value at g
/// (on the full module including 0 the value is this plus one).
std::size_t fixed_points(const Mat& g, const GSet& domain);

struct Orbits {
    std::size_t count = 0;
    std::vector<std::uint32_t> orbit_of;   // domain index -> orbit id
    std::vector<std::uint64_t> sizes;      // per orbit id
    std::vector<std::size_t> representatives; // smallest domain index per orbit
};

/// Orbit decomposition of the domain under the generators (breadth-first
/// walk over precomputed generator permutations).
Orbits orbit_count(const GeneratorSet& gens, const GSet& domain);

/// Number of orbits of the diagonal action on X x Y. For permutation
/// characters this is the inner product <pi_X, pi_Y>.
std::uint64_t char_inner_product(const GSet& x, const GSet& y, const GeneratorSet& gens,
                                 std::uint64_t max_product = kDefaultProductBound);

} // namespace sympchar
