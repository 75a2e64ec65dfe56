#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympchar/space.hpp"

namespace sympchar {

inline constexpr std::uint64_t kDefaultGroupBound = 20'000'000;

enum class GroupLabel { Sp, OPlus, OMinus, VectorStabilizer, LineStabilizer };

std::string group_label_name(GroupLabel label);

/// x -> x + lambda (x,v) v. Throws PreconditionViolated when v = 0.
Mat symplectic_transvection(const Space& sp, const Vec& v, Fe lambda);

/// x -> x + Q(v)^{-1} (x,v) v; an involution preserving both the
/// alternating form and Q. Throws PreconditionViolated when Q(v) = 0.
Mat orthogonal_transvection(const QuadraticForm& q, const Vec& v);

/**
 * A labelled generating set with its claimed group order.
 *
 * Orders come from the classical formulas:
 *   |Sp_2m(q)|   = q^(m^2) prod_{i=1..m} (q^(2i) - 1)
 *   |O^eps_2m(q)| = 2 q^(m(m-1)) (q^m - eps) prod_{i=1..m-1} (q^(2i) - 1)
 *   |G_v| = |Sp| / (q^(2m) - 1),   |P| = (q-1) |G_v|
 * and are cross-checked against breadth-first closure whenever the group is
 * small enough to enumerate.
 */
struct GeneratorSet {
    GroupLabel label = GroupLabel::Sp;
    std::vector<Mat> gens;
    std::uint64_t claimed_order = 0;
    std::optional<Vec> fixed_vector;        // VectorStabilizer / LineStabilizer
    std::optional<Vec> form_diagonal;       // OPlus / OMinus
};

struct BuildOptions {
    std::optional<Vec> vector;              // defaults to e1
    std::optional<QuadraticForm> form;      // defaults to the standard form of the type
    std::uint64_t enum_bound = kDefaultGroupBound; // used by the shortfall repair
};

/**
 * Builds generators for one of the five groups. Transvection-based
 * throughout; when the claimed order is within the enumeration bound the
 * closure is checked, and a shortfall is repaired by pulling a missing
 * stabilizer element out of the full symplectic group (the classical
 * O+_4(2) case is the one known offender). An unrepairable shortfall
 * raises GenerationShortfall.
 */
GeneratorSet build_generators(GroupLabel label, const Space& sp, const BuildOptions& opts = {});

/// Does g satisfy the defining predicate of the labelled group?
bool satisfies_label(const GeneratorSet& gs, const Space& sp, const Mat& g);

/// Order formulas (saturate at UINT64_MAX on overflow).
std::uint64_t sp_order(unsigned m, unsigned q);
std::uint64_t orthogonal_order(unsigned m, unsigned q, FormType type);
std::uint64_t vector_stabilizer_order(unsigned m, unsigned q);
std::uint64_t line_stabilizer_order(unsigned m, unsigned q);

/// Result of a full group enumeration: all elements exactly once, as packed
/// keys in ascending order.
class GroupElements {
public:
    GroupElements(const Field& gf, unsigned dim, std::vector<std::uint64_t> keys);
    std::size_t size() const { return keys_.size(); }
    Mat at(std::size_t i) const { return Mat::unpack(*gf_, dim_, keys_[i]); }
    bool contains(const Mat& g) const;
    const std::vector<std::uint64_t>& keys() const { return keys_; }
    unsigned dim() const { return dim_; }

private:
    const Field* gf_;
    unsigned dim_;
    std::vector<std::uint64_t> keys_; // sorted
};

/// Breadth-first closure of the generators (no order cross-check).
std::vector<std::uint64_t> generator_closure(const Field& gf, unsigned dim,
                                             const std::vector<Mat>& gens,
                                             std::uint64_t bound);

/// Closure plus the order cross-check against gens.claimed_order.
GroupElements enumerate_group(const Space& sp, const GeneratorSet& gens,
                              std::uint64_t bound = kDefaultGroupBound);

/// Deterministic pseudo-random elements: products of word_length factors
/// drawn from the generators and their inverses.
std::vector<Mat> random_elements(const Space& sp, const GeneratorSet& gens,
                                 std::size_t count, std::uint64_t seed,
                                 unsigned word_length = 64);

} // namespace sympchar
