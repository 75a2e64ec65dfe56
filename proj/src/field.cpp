#include "sympchar/field.hpp"

#include <algorithm>

namespace sympchar {

namespace {

// Polynomial (carry-less) product of two GF(2)[x] bitmasks.
unsigned poly_mul(unsigned a, unsigned b) {
    unsigned r = 0;
    while (b) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
    }
    return r;
}

int poly_degree(unsigned p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

unsigned poly_mod(unsigned a, unsigned m) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a))
        a ^= m << (da - dm);
    return a;
}

} // namespace

bool Field::is_irreducible(unsigned poly) {
    const int d = poly_degree(poly);
    if (d < 1) return false;
    // Trial division by every polynomial of degree 1..d/2 suffices here.
    for (unsigned q = 2; q < (1u << (d / 2 + 1)); ++q) {
        if (poly_degree(q) < 1) continue;
        if (poly_mod(poly, q) == 0) return false;
    }
    return true;
}

unsigned Field::smallest_modulus(unsigned degree) {
    for (unsigned p = 1u << degree; p < (2u << degree); ++p)
        if (is_irreducible(p)) return p;
    throw FieldError("no irreducible polynomial found"); // unreachable for degree >= 1
}

Field::Field(unsigned degree) : Field(degree, smallest_modulus(degree)) {}

Field::Field(unsigned degree, unsigned modulus) : f_(degree), modulus_(modulus) {
    if (degree < 1 || degree > 8)
        throw FieldError("extension degree must be between 1 and 8");
    if (poly_degree(modulus) != static_cast<int>(degree) || !is_irreducible(modulus))
        throw FieldError("modulus is not an irreducible polynomial of the requested degree");
    q_ = 1u << f_;
    build_tables();
}

void Field::build_tables() {
    auto slow_mul = [this](unsigned a, unsigned b) -> Fe {
        return static_cast<Fe>(poly_mod(poly_mul(a, b), modulus_));
    };

    // Multiplicative order via repeated multiplication; q <= 256 keeps this cheap.
    auto order = [&](unsigned a) {
        unsigned x = a, o = 1;
        while (x != 1) {
            x = slow_mul(x, a);
            ++o;
        }
        return o;
    };

    generator_ = 1;
    for (unsigned a = 2; a < q_; ++a) {
        if (order(a) == q_ - 1) {
            generator_ = static_cast<Fe>(a);
            break;
        }
    }

    // Discrete log/antilog pair over the generator, then a dense product table.
    std::vector<Fe> alog(q_ - 1);
    std::vector<unsigned> log(q_, 0);
    unsigned x = 1;
    for (unsigned i = 0; i + 1 < q_; ++i) {
        alog[i] = static_cast<Fe>(x);
        log[x] = i;
        x = slow_mul(x, generator_);
    }

    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (unsigned a = 1; a < q_; ++a)
        for (unsigned b = 1; b < q_; ++b)
            mul_table_[(a << f_) | b] = alog[(log[a] + log[b]) % (q_ - 1)];

    inv_table_.assign(q_, 0);
    for (unsigned a = 1; a < q_; ++a)
        inv_table_[a] = alog[(q_ - 1 - log[a]) % (q_ - 1)];

    trace_table_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        unsigned t = 0, y = a;
        for (unsigned i = 0; i < f_; ++i) {
            t ^= y;
            y = slow_mul(y, y);
        }
        if (t != 0 && t != 1) throw FieldError("trace landed outside the prime field");
        trace_table_[a] = static_cast<std::uint8_t>(t);
    }
}

Fe Field::pow(Fe a, std::uint64_t e) const {
    Fe r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Fe Field::smallest_trace_one() const {
    for (unsigned a = 0; a < q_; ++a)
        if (trace_table_[a] == 1) return static_cast<Fe>(a);
    throw FieldError("no trace-one element"); // impossible: trace is onto GF(2)
}

std::vector<Fe> Field::artin_schreier_image() const {
    std::vector<bool> seen(q_, false);
    for (unsigned a = 0; a < q_; ++a)
        seen[a ^ mul(static_cast<Fe>(a), static_cast<Fe>(a))] = true;
    std::vector<Fe> out;
    for (unsigned v = 0; v < q_; ++v)
        if (seen[v]) out.push_back(static_cast<Fe>(v));
    return out;
}

} // namespace sympchar
