#include "sympchar/space.hpp"

#include <algorithm>
#include <cassert>

namespace sympchar {

// ---------------------------------------------------------------------------
// Space

Space::Space(const Field& gf, unsigned m) : gf_(&gf), m_(m) {
    if (m < 1 || 2 * m > Mat::kMaxDim) throw DimensionError("m must be between 1 and 4");
}

std::uint64_t Space::num_vectors() const {
    const unsigned bits = gf_->degree() * dim();
    if (bits >= 64) throw BoundExceeded("vector space too large to index", bits, 63);
    return std::uint64_t{1} << bits;
}

Fe Space::bilinear_raw(const Fe* u, const Fe* v) const {
    Fe r = 0;
    for (unsigned i = 0; i < dim(); i += 2)
        r ^= gf_->mul(u[i], v[i + 1]) ^ gf_->mul(u[i + 1], v[i]);
    return r;
}

Fe Space::bilinear(const Vec& u, const Vec& v) const {
    if (u.size() != dim() || v.size() != dim())
        throw DimensionError("vector length does not match the space");
    return bilinear_raw(u.data(), v.data());
}

std::vector<Fe> Space::standard_gram() const {
    std::vector<Fe> g(dim() * dim(), 0);
    for (unsigned i = 0; i < dim(); i += 2) {
        g[i * dim() + i + 1] = 1;
        g[(i + 1) * dim() + i] = 1;
    }
    return g;
}

Vec Space::basis_vector(unsigned i) const {
    Vec v(dim(), 0);
    v.at(i) = 1;
    return v;
}

std::uint64_t Space::pack(const Vec& v) const {
    if (v.size() != dim()) throw DimensionError("vector length does not match the space");
    return pack_vector(*gf_, v.data(), dim());
}

Vec Space::unpack(std::uint64_t key) const {
    Vec v(dim(), 0);
    unpack_vector(*gf_, key, v.data(), dim());
    return v;
}

bool Space::is_zero(const Vec& v) const {
    return std::all_of(v.begin(), v.end(), [](Fe c) { return c == 0; });
}

Vec Space::scale(Fe c, const Vec& v) const {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = gf_->mul(c, v[i]);
    return out;
}

Vec Space::add(const Vec& u, const Vec& v) {
    assert(u.size() == v.size());
    Vec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = static_cast<Fe>(u[i] ^ v[i]);
    return out;
}

Vec Space::line_representative(const Vec& v) const {
    for (unsigned i = 0; i < v.size(); ++i) {
        if (v[i] != 0) return scale(gf_->inv(v[i]), v);
    }
    throw DimensionError("zero vector spans no line");
}

// ---------------------------------------------------------------------------
// QuadraticForm / LinearFunctional

QuadraticForm::QuadraticForm(const Space& sp, std::vector<Fe> upper)
    : sp_(&sp), c_(std::move(upper)) {
    const unsigned n = sp.dim();
    if (c_.size() != static_cast<std::size_t>(n) * n)
        throw DimensionError("coefficient matrix size mismatch");
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < i; ++j)
            if (c_[i * n + j] != 0)
                throw DimensionError("coefficients must be upper triangular");
}

QuadraticForm QuadraticForm::from_diagonal(const Space& sp, const Vec& d) {
    const unsigned n = sp.dim();
    if (d.size() != n) throw DimensionError("diagonal length mismatch");
    std::vector<Fe> c(static_cast<std::size_t>(n) * n, 0);
    for (unsigned i = 0; i < n; i += 2) c[i * n + i + 1] = 1;
    for (unsigned i = 0; i < n; ++i) c[i * n + i] = d[i];
    return QuadraticForm(sp, std::move(c));
}

Fe QuadraticForm::coefficient(unsigned i, unsigned j) const {
    assert(i <= j && j < sp_->dim());
    return c_[i * sp_->dim() + j];
}

Fe QuadraticForm::eval_raw(const Fe* v) const {
    const Field& gf = sp_->field();
    const unsigned n = sp_->dim();
    Fe r = 0;
    for (unsigned i = 0; i < n; ++i) {
        const Fe vi = v[i];
        if (!vi) continue;
        for (unsigned j = i; j < n; ++j) {
            const Fe cij = c_[i * n + j];
            if (cij) r ^= gf.mul(cij, gf.mul(vi, v[j]));
        }
    }
    return r;
}

Fe QuadraticForm::eval(const Vec& v) const {
    if (v.size() != sp_->dim()) throw DimensionError("vector length does not match the form");
    return eval_raw(v.data());
}

std::vector<Fe> QuadraticForm::polarization() const {
    const unsigned n = sp_->dim();
    std::vector<Fe> b(static_cast<std::size_t>(n) * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            b[i * n + j] = b[j * n + i] = c_[i * n + j];
    return b;
}

bool QuadraticForm::polarizes_to_standard() const {
    return polarization() == sp_->standard_gram();
}

Vec QuadraticForm::diagonal_over_standard() const {
    if (!polarizes_to_standard())
        throw PreconditionViolated("form does not polarize to the standard alternating form");
    const unsigned n = sp_->dim();
    Vec d(n);
    for (unsigned i = 0; i < n; ++i) d[i] = c_[i * n + i];
    return d;
}

LinearFunctional::LinearFunctional(const Space& sp, Vec coords)
    : sp_(&sp), coords_(std::move(coords)) {
    if (coords_.size() != sp.dim()) throw DimensionError("functional length mismatch");
}

Fe LinearFunctional::eval(const Vec& v) const {
    if (v.size() != coords_.size()) throw DimensionError("vector length mismatch");
    const Field& gf = sp_->field();
    Fe r = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) r ^= gf.mul(coords_[i], v[i]);
    return r;
}

QuadraticForm LinearFunctional::add_square_to(const QuadraticForm& q) const {
    // (sum l_i x_i)^2 = sum l_i^2 x_i^2, so only diagonal coefficients move.
    const Space& sp = *sp_;
    const unsigned n = sp.dim();
    std::vector<Fe> c(static_cast<std::size_t>(n) * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j) c[i * n + j] = q.coefficient(i, j);
    for (unsigned i = 0; i < n; ++i)
        c[i * n + i] ^= sp.field().sqr(coords_[i]);
    return QuadraticForm(sp, std::move(c));
}

// ---------------------------------------------------------------------------
// Standard forms and type classification

QuadraticForm standard_plus_form(const Space& sp) {
    return QuadraticForm::from_diagonal(sp, sp.zero_vector());
}

QuadraticForm standard_minus_form(const Space& sp) {
    Vec d = sp.zero_vector();
    d[0] = 1;
    d[1] = sp.field().smallest_trace_one();
    return QuadraticForm::from_diagonal(sp, d);
}

std::pair<QuadraticForm, QuadraticForm> standard_forms(const Space& sp) {
    return {standard_plus_form(sp), standard_minus_form(sp)};
}

std::uint64_t zero_count(const QuadraticForm& q) {
    const Space& sp = q.space();
    const std::uint64_t total = sp.num_vectors();
    std::array<Fe, Mat::kMaxDim> v{};
    std::uint64_t zeros = 0;
    for (std::uint64_t key = 0; key < total; ++key) {
        unpack_vector(sp.field(), key, v.data(), sp.dim());
        if (q.eval_raw(v.data()) == 0) ++zeros;
    }
    return zeros;
}

FormType classify_type(const QuadraticForm& q) {
    const Space& sp = q.space();
    if (!q.polarizes_to_standard())
        throw PreconditionViolated("type is defined only for standard polarization");
    const std::vector<Vec> basis = complete_hyperbolic_basis(sp);
    Fe arf = 0;
    for (unsigned t = 0; t < sp.m(); ++t)
        arf ^= sp.field().mul(q.eval(basis[2 * t]), q.eval(basis[2 * t + 1]));
    return sp.field().trace(arf) == 0 ? FormType::Plus : FormType::Minus;
}

FormType classify_type_by_zero_count(const QuadraticForm& q) {
    const Space& sp = q.space();
    const unsigned m = sp.m();
    const std::uint64_t qq = sp.field().size();
    std::uint64_t half = 1, qm = 1;
    for (unsigned i = 0; i + 1 < 2 * m; ++i) half *= qq;   // q^(2m-1)
    for (unsigned i = 0; i < m; ++i) qm *= qq;             // q^m
    const std::uint64_t dev = qm - qm / qq;                // q^m - q^(m-1)
    const std::uint64_t zeros = zero_count(q);
    if (zeros == half + dev) return FormType::Plus;
    if (zeros == half - dev) return FormType::Minus;
    throw PreconditionViolated("zero count matches neither type (degenerate form?)");
}

std::vector<QuadraticForm> forms_with_standard_polarization(const Space& sp,
                                                            std::uint64_t bound) {
    const std::uint64_t total = sp.num_vectors();
    if (total > bound)
        throw BoundExceeded("form enumeration over the configured bound", total, bound);
    const QuadraticForm qplus = standard_plus_form(sp);
    std::vector<QuadraticForm> out;
    out.reserve(total);
    for (std::uint64_t key = 0; key < total; ++key)
        out.push_back(LinearFunctional(sp, sp.unpack(key)).add_square_to(qplus));
    std::sort(out.begin(), out.end(), [&](const QuadraticForm& a, const QuadraticForm& b) {
        return sp.pack(a.diagonal_over_standard()) < sp.pack(b.diagonal_over_standard());
    });
    return out;
}

// ---------------------------------------------------------------------------
// Hyperbolic bases and Witt extension

namespace {

// Gram entry of the standard basis at positions (i, j).
Fe standard_gram_entry(unsigned i, unsigned j) {
    return (i != j && i / 2 == j / 2) ? 1 : 0;
}

} // namespace

std::vector<Vec> complete_hyperbolic_basis(const Space& sp, const std::vector<Vec>& partial) {
    const unsigned dim = sp.dim();
    if (partial.size() > dim) throw NotExtendable("partial sequence longer than a basis");
    for (const Vec& p : partial)
        if (p.size() != dim) throw DimensionError("partial vector length mismatch");
    for (std::size_t i = 0; i < partial.size(); ++i)
        for (std::size_t j = i + 1; j < partial.size(); ++j)
            if (sp.bilinear(partial[i], partial[j]) != standard_gram_entry(i, j))
                throw NotExtendable("partial sequence is not a standard-Gram prefix");
    if (partial.size() % 2 == 1 && sp.is_zero(partial.back()))
        throw NotExtendable("unpaired partial vector is zero");

    const std::uint64_t total = sp.num_vectors();
    std::vector<Vec> basis = partial;
    while (basis.size() < dim) {
        const std::size_t paired = basis.size() - (basis.size() % 2);
        auto clear_of_pairs = [&](const Vec& x) {
            for (std::size_t t = 0; t < paired; ++t)
                if (sp.bilinear(basis[t], x) != 0) return false;
            return true;
        };
        bool found = false;
        if (basis.size() % 2 == 0) {
            // next e: smallest nonzero vector orthogonal to every completed pair
            for (std::uint64_t key = 1; key < total && !found; ++key) {
                Vec x = sp.unpack(key);
                if (clear_of_pairs(x)) {
                    basis.push_back(std::move(x));
                    found = true;
                }
            }
        } else {
            // partner: smallest vector clear of completed pairs that pairs with e
            const Vec e = basis.back();
            for (std::uint64_t key = 1; key < total && !found; ++key) {
                Vec y = sp.unpack(key);
                if (!clear_of_pairs(y)) continue;
                const Fe c = sp.bilinear(e, y);
                if (c != 0) {
                    basis.push_back(sp.scale(sp.field().inv(c), y));
                    found = true;
                }
            }
        }
        if (!found) throw NotExtendable("no completion candidate found");
    }
    return basis;
}

namespace {

Mat basis_matrix(const Space& sp, const std::vector<Vec>& rows) {
    Mat b(sp.field(), sp.dim());
    for (unsigned i = 0; i < sp.dim(); ++i)
        for (unsigned j = 0; j < sp.dim(); ++j) b.at(i, j) = rows[i][j];
    return b;
}

bool proportional(const Space& sp, const Vec& a, const Vec& b) {
    // is b in <a>?  (a assumed nonzero)
    for (unsigned i = 0; i < sp.dim(); ++i) {
        if (a[i] != 0) {
            const Fe c = sp.field().mul(b[i], sp.field().inv(a[i]));
            return sp.scale(c, a) == b;
        }
    }
    return false;
}

// Symplectic basis (v, w, u, z, ...) with v, u a prescribed orthogonal
// independent pair. Used for the (v,u) = 0 branch of witt_extend.
std::vector<Vec> adapted_basis(const Space& sp, const Vec& v, const Vec& u) {
    const Field& gf = sp.field();
    const std::uint64_t total = sp.num_vectors();

    // z: pairs with u, orthogonal to v
    Vec z;
    for (std::uint64_t key = 1; key < total; ++key) {
        Vec y = sp.unpack(key);
        if (sp.bilinear(v, y) != 0) continue;
        const Fe c = sp.bilinear(u, y);
        if (c != 0) {
            z = sp.scale(gf.inv(c), y);
            break;
        }
    }
    if (z.empty())
        throw PreconditionViolated("no symplectic partner for u inside the perp of v");

    // w: pairs with v, orthogonal to u and z
    Vec w;
    for (std::uint64_t key = 1; key < total; ++key) {
        Vec y = sp.unpack(key);
        if (sp.bilinear(v, y) == 0) continue;
        // project into the perp of the (u, z) pair
        y = Space::add(y, sp.scale(sp.bilinear(y, z), u));
        y = Space::add(y, sp.scale(sp.bilinear(y, u), z));
        const Fe c = sp.bilinear(v, y);
        if (c != 0) {
            w = sp.scale(gf.inv(c), y);
            break;
        }
    }
    if (w.empty()) throw PreconditionViolated("no symplectic partner for v");

    return complete_hyperbolic_basis(sp, {v, w, u, z});
}

} // namespace

Mat witt_extend(const Space& sp, const Vec& v, const Vec& u, const Vec& uprime) {
    const Field& gf = sp.field();
    if (sp.is_zero(v)) throw PreconditionViolated("v must be nonzero");
    if (sp.is_zero(u) || sp.is_zero(uprime) || proportional(sp, v, u) ||
        proportional(sp, v, uprime))
        throw PreconditionViolated("u and u' must lie outside <v>");
    const Fe c = sp.bilinear(v, u);
    if (c != sp.bilinear(v, uprime))
        throw PreconditionViolated("(v,u) and (v,u') differ; the planes are not isometric");

    std::vector<Vec> b1, b2;
    if (c != 0) {
        const Fe ci = gf.inv(c);
        b1 = complete_hyperbolic_basis(sp, {v, sp.scale(ci, u)});
        b2 = complete_hyperbolic_basis(sp, {v, sp.scale(ci, uprime)});
    } else {
        b1 = adapted_basis(sp, v, u);
        b2 = adapted_basis(sp, v, uprime);
    }
    // g maps the first basis row-by-row onto the second
    return basis_matrix(sp, b1).inverse().mul(basis_matrix(sp, b2));
}

bool is_isometry(const Space& sp, const Mat& g) {
    const unsigned n = sp.dim();
    if (g.dim() != n) return false;
    std::vector<Vec> rows(n);
    for (unsigned i = 0; i < n; ++i) {
        rows[i] = Vec(n);
        for (unsigned j = 0; j < n; ++j) rows[i][j] = g.at(i, j);
    }
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            if (sp.bilinear(rows[i], rows[j]) != standard_gram_entry(i, j)) return false;
    return true;
}

bool preserves_form(const QuadraticForm& q, const Mat& g) {
    const Space& sp = q.space();
    const unsigned n = sp.dim();
    if (g.dim() != n) return false;
    std::vector<Vec> rows(n);
    for (unsigned i = 0; i < n; ++i) {
        rows[i] = Vec(n);
        for (unsigned j = 0; j < n; ++j) rows[i][j] = g.at(i, j);
    }
    // Compare canonical coefficients of Q∘g with those of Q.
    const std::vector<Fe> polar = q.polarization();
    for (unsigned i = 0; i < n; ++i) {
        if (q.eval(rows[i]) != q.coefficient(i, i)) return false;
        for (unsigned j = i + 1; j < n; ++j) {
            const Fe bij = static_cast<Fe>(q.eval(Space::add(rows[i], rows[j])) ^
                                           q.eval(rows[i]) ^ q.eval(rows[j]));
            if (bij != polar[i * n + j]) return false;
        }
    }
    return true;
}

} // namespace sympchar
