#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sympchar/matrix.hpp"

namespace sympchar {

inline constexpr std::uint64_t kDefaultEnumBound = 1u << 24;

enum class FormType { Plus, Minus };

inline char form_type_char(FormType t) { return t == FormType::Plus ? '+' : '-'; }

class Space;

/**
 * Quadratic form Q(x) = sum_{i<=j} C_ij x_i x_j, stored as the
 * upper-triangular coefficient matrix C. The polarization C + C^T recovers
 * the bilinear form Q(u+v) + Q(u) + Q(v).
 */
class QuadraticForm {
public:
    QuadraticForm(const Space& sp, std::vector<Fe> upper_triangular_row_major);

    /// Standard plus form shifted by a squared functional: coefficients of
    /// Q+ with diag(d) added. Every form polarizing to the standard
    /// alternating form arises this way for exactly one d.
    static QuadraticForm from_diagonal(const Space& sp, const Vec& d);

    const Space& space() const { return *sp_; }
    Fe coefficient(unsigned i, unsigned j) const; // i <= j
    Fe eval(const Vec& v) const;
    Fe eval_raw(const Fe* v) const;

    /// C + C^T, row-major dim x dim.
    std::vector<Fe> polarization() const;
    bool polarizes_to_standard() const;

    /// The d with Q = Q+ + diag(d); requires standard polarization.
    Vec diagonal_over_standard() const;

    bool operator==(const QuadraticForm& o) const { return c_ == o.c_; }

private:
    const Space* sp_;
    std::vector<Fe> c_; // row-major, entries below the diagonal all zero
};

/// Linear functional l(v) = sum l_i v_i.
class LinearFunctional {
public:
    LinearFunctional(const Space& sp, Vec coords);
    Fe eval(const Vec& v) const;
    const Vec& coords() const { return coords_; }

    /// Q + l^2 as a quadratic form; in characteristic 2 the square of a
    /// functional only shifts the diagonal coefficients.
    QuadraticForm add_square_to(const QuadraticForm& q) const;

private:
    const Space* sp_;
    Vec coords_;
};

/**
 * The 2m-dimensional symplectic space over GF(2^f). Carries the standard
 * alternating form pairing coordinates (0,1), (2,3), ..., and the canonical
 * vector enumeration used for every "smallest candidate" choice.
 */
class Space {
public:
    Space(const Field& gf, unsigned m);

    const Field& field() const { return *gf_; }
    unsigned m() const { return m_; }
    unsigned dim() const { return 2 * m_; }
    std::uint64_t num_vectors() const; // q^(2m)

    /// Standard alternating form (u, v).
    Fe bilinear(const Vec& u, const Vec& v) const;
    Fe bilinear_raw(const Fe* u, const Fe* v) const;

    /// Gram matrix of the standard form, row-major dim x dim.
    std::vector<Fe> standard_gram() const;

    Vec basis_vector(unsigned i) const;
    Vec zero_vector() const { return Vec(dim(), 0); }

    std::uint64_t pack(const Vec& v) const;
    Vec unpack(std::uint64_t key) const;

    bool is_zero(const Vec& v) const;
    Vec scale(Fe c, const Vec& v) const;
    static Vec add(const Vec& u, const Vec& v);

    /// Canonical representative of the 1-space through v: scaled so the
    /// first nonzero coordinate is 1.
    Vec line_representative(const Vec& v) const;

private:
    const Field* gf_;
    unsigned m_;
};

QuadraticForm standard_plus_form(const Space& sp);
QuadraticForm standard_minus_form(const Space& sp);
std::pair<QuadraticForm, QuadraticForm> standard_forms(const Space& sp);

std::uint64_t zero_count(const QuadraticForm& q);

/// Type from the Arf invariant, evaluated on a hyperbolic basis produced by
/// complete_hyperbolic_basis. Requires standard polarization.
FormType classify_type(const QuadraticForm& q);

/// Independent route: type from the number of zeros of Q on the whole space,
/// q^(2m-1) + eps (q^m - q^(m-1)).
FormType classify_type_by_zero_count(const QuadraticForm& q);

/// All q^(2m) forms polarizing to the standard alternating form, in
/// canonical (diagonal) order.
std::vector<QuadraticForm> forms_with_standard_polarization(
    const Space& sp, std::uint64_t bound = kDefaultEnumBound);

/**
 * Completes a partial sequence to a basis (e1, f1, ..., em, fm) whose Gram
 * matrix is the standard block form. The partial sequence is taken as a
 * prefix of the output and must itself match the standard Gram pattern;
 * otherwise NotExtendable is thrown. Free slots are filled greedily with
 * the smallest vector in canonical order that pairs correctly.
 */
std::vector<Vec> complete_hyperbolic_basis(const Space& sp,
                                           const std::vector<Vec>& partial = {});

/**
 * Witt extension: given (v,u) = (v,u') with u, u' outside <v>, returns a
 * symplectic g with v g = v and u g = u'. Throws PreconditionViolated when
 * the two planes are not isometric via the prescribed correspondence.
 */
Mat witt_extend(const Space& sp, const Vec& v, const Vec& u, const Vec& uprime);

/// Does g preserve the standard alternating form?
bool is_isometry(const Space& sp, const Mat& g);

/// Does g preserve the quadratic form q (hence also its polarization)?
bool preserves_form(const QuadraticForm& q, const Mat& g);

} // namespace sympchar
