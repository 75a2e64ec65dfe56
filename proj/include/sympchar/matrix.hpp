#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sympchar/field.hpp"

namespace sympchar {

using Vec = std::vector<Fe>;

/**
 * Dense square matrix over GF(2^f), dimension at most 8, acting on row
 * vectors by right multiplication. Storage is inline so elements can be
 * copied freely during breadth-first group enumeration.
 */
class Mat {
public:
    static constexpr unsigned kMaxDim = 8;

    Mat() = default;
    Mat(const Field& gf, unsigned n);
    static Mat identity(const Field& gf, unsigned n);

    unsigned dim() const { return n_; }
    const Field& field() const { return *gf_; }

    Fe at(unsigned i, unsigned j) const { return a_[i * n_ + j]; }
    Fe& at(unsigned i, unsigned j) { return a_[i * n_ + j]; }

    Mat mul(const Mat& rhs) const;
    Vec apply(const Vec& v) const;

    /// out = in * this, raw buffers of length dim().
    void apply_into(const Fe* in, Fe* out) const;

    /// Gauss-Jordan inverse; throws SingularMatrix.
    Mat inverse() const;

    bool is_identity() const;
    bool operator==(const Mat& o) const;

    /// Row-major entry packing, f bits per entry. Requires dim()^2 * f <= 64.
    std::uint64_t pack() const;
    static Mat unpack(const Field& gf, unsigned n, std::uint64_t key);
    static bool packable(const Field& gf, unsigned n) {
        return static_cast<unsigned>(n) * n * gf.degree() <= 64;
    }

private:
    const Field* gf_ = nullptr;
    unsigned n_ = 0;
    std::array<Fe, kMaxDim * kMaxDim> a_{};
};

/// Packing of a coordinate vector: f bits per coordinate, coordinate 0 in
/// the low bits. Doubles as the canonical enumeration order of vectors.
std::uint64_t pack_vector(const Field& gf, const Fe* v, unsigned n);
void unpack_vector(const Field& gf, std::uint64_t key, Fe* v, unsigned n);

} // namespace sympchar
