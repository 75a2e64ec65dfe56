#pragma once

#include <cstdint>
#include <vector>

#include "sympchar/errors.hpp"

namespace sympchar {

/// Field element of GF(2^f), stored as a bitmask of the f polynomial
/// coefficients (bit i = coefficient of x^i). Always interpreted relative
/// to a Field. Addition is xor and needs no context.
using Fe = std::uint8_t;

/**
 * GF(2^f) for 1 <= f <= 8, with a fixed irreducible modulus.
 *
 * The default modulus is the irreducible degree-f polynomial over GF(2)
 * with the smallest coefficient bitmask, so constructions are reproducible
 * across runs. Multiplication is table-driven: a discrete log / antilog
 * pair is built from a multiplicative generator and expanded into a dense
 * q x q product table (at most 64 KiB).
 *
 * Immutable after construction; all operations are pure and safe to share
 * across threads.
 */
class Field {
public:
    /// Field with the canonical (smallest) irreducible modulus of degree f.
    explicit Field(unsigned degree);

    /// Field with an explicit modulus, encoded as f+1 coefficient bits.
    /// Throws FieldError if the polynomial is not irreducible of degree f.
    Field(unsigned degree, unsigned modulus);

    unsigned degree() const { return f_; }     ///< f
    unsigned size() const { return q_; }       ///< q = 2^f
    unsigned modulus() const { return modulus_; }

    static Fe add(Fe a, Fe b) { return static_cast<Fe>(a ^ b); }

    Fe mul(Fe a, Fe b) const { return mul_table_[(static_cast<unsigned>(a) << f_) | b]; }

    /// Multiplicative inverse; throws FieldError on zero.
    Fe inv(Fe a) const {
        if (a == 0) throw FieldError("inverse of zero");
        return inv_table_[a];
    }

    Fe sqr(Fe a) const { return mul(a, a); }
    Fe frobenius(Fe a) const { return sqr(a); }
    Fe pow(Fe a, std::uint64_t e) const;

    /// Absolute trace Tr(a) = a + a^2 + ... + a^(2^(f-1)), in {0,1}.
    int trace(Fe a) const { return trace_table_[a]; }

    /// Smallest generator of the multiplicative group (1 when q = 2).
    Fe generator() const { return generator_; }

    /// Smallest element with trace 1.
    Fe smallest_trace_one() const;

    /// {a + a^2 : a in GF(q)}, sorted ascending. Has exactly q/2 elements
    /// and coincides with the kernel of the trace.
    std::vector<Fe> artin_schreier_image() const;

    /// Lexicographically smallest irreducible polynomial of degree f.
    static unsigned smallest_modulus(unsigned degree);

    /// Trial-division irreducibility test for polynomials of degree <= 8.
    static bool is_irreducible(unsigned poly);

    bool operator==(const Field& o) const { return f_ == o.f_ && modulus_ == o.modulus_; }

private:
    void build_tables();

    unsigned f_ = 0;
    unsigned q_ = 0;
    unsigned modulus_ = 0;
    Fe generator_ = 1;
    std::vector<Fe> mul_table_;       // q*q, index (a << f) | b
    std::vector<Fe> inv_table_;       // q
    std::vector<std::uint8_t> trace_table_; // q
};

} // namespace sympchar
