#include "sympchar/group.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace sympchar {

std::string group_label_name(GroupLabel label) {
    switch (label) {
        case GroupLabel::Sp: return "Sp";
        case GroupLabel::OPlus: return "O+";
        case GroupLabel::OMinus: return "O-";
        case GroupLabel::VectorStabilizer: return "G_v";
        case GroupLabel::LineStabilizer: return "P";
    }
    return "?";
}

Mat symplectic_transvection(const Space& sp, const Vec& v, Fe lambda) {
    if (sp.is_zero(v)) throw PreconditionViolated("transvection direction must be nonzero");
    const Field& gf = sp.field();
    const unsigned n = sp.dim();
    Mat t = Mat::identity(gf, n);
    for (unsigned i = 0; i < n; ++i) {
        const Fe c = gf.mul(lambda, sp.bilinear(sp.basis_vector(i), v));
        if (!c) continue;
        for (unsigned j = 0; j < n; ++j) t.at(i, j) ^= gf.mul(c, v[j]);
    }
    return t;
}

Mat orthogonal_transvection(const QuadraticForm& q, const Vec& v) {
    const Fe qv = q.eval(v);
    if (qv == 0) throw PreconditionViolated("orthogonal transvection needs a nonsingular vector");
    return symplectic_transvection(q.space(), v, q.space().field().inv(qv));
}

// ---------------------------------------------------------------------------
// Order formulas

namespace {

using u128 = unsigned __int128;

constexpr u128 kU128Max = ~u128{0};

u128 mul_cap(u128 a, u128 b) {
    if (a != 0 && b > kU128Max / a) return kU128Max;
    return a * b;
}

std::uint64_t saturate(u128 x) {
    return x > u128{UINT64_MAX} ? UINT64_MAX : static_cast<std::uint64_t>(x);
}

u128 pow_cap(std::uint64_t base, unsigned exp) {
    u128 r = 1;
    for (unsigned i = 0; i < exp; ++i) r = mul_cap(r, base);
    return r;
}

} // namespace

std::uint64_t sp_order(unsigned m, unsigned q) {
    u128 r = pow_cap(q, m * m);
    for (unsigned i = 1; i <= m; ++i) r = mul_cap(r, pow_cap(q, 2 * i) - 1);
    return saturate(r);
}

std::uint64_t orthogonal_order(unsigned m, unsigned q, FormType type) {
    const u128 qm = pow_cap(q, m);
    u128 r = mul_cap(2, pow_cap(q, m * (m - 1)));
    r = mul_cap(r, type == FormType::Plus ? qm - 1 : qm + 1);
    for (unsigned i = 1; i + 1 <= m; ++i) r = mul_cap(r, pow_cap(q, 2 * i) - 1);
    return saturate(r);
}

std::uint64_t vector_stabilizer_order(unsigned m, unsigned q) {
    // |Sp| / (q^(2m) - 1) in product form, so no division is needed
    u128 r = pow_cap(q, m * m);
    for (unsigned i = 1; i + 1 <= m; ++i) r = mul_cap(r, pow_cap(q, 2 * i) - 1);
    return saturate(r);
}

std::uint64_t line_stabilizer_order(unsigned m, unsigned q) {
    return saturate(mul_cap(q - 1, vector_stabilizer_order(m, q)));
}

// ---------------------------------------------------------------------------
// Closure and enumeration

std::vector<std::uint64_t> generator_closure(const Field& gf, unsigned dim,
                                             const std::vector<Mat>& gens,
                                             std::uint64_t bound) {
    if (!Mat::packable(gf, dim))
        throw BoundExceeded("group elements do not fit 64-bit keys",
                            static_cast<std::uint64_t>(dim) * dim * gf.degree(), 64);

    const std::uint64_t id_key = Mat::identity(gf, dim).pack();
    std::unordered_set<std::uint64_t> seen{id_key};
    std::vector<std::uint64_t> found{id_key};
    std::vector<Mat> active;
    std::size_t processed = 0;
    std::size_t cursor = 0;

    // Generators are activated one at a time: most of a long generator list
    // is usually already inside the closure of the first few, and inactive
    // generators then cost a hash lookup instead of |G| multiplications.
    for (;;) {
        while (processed < found.size()) {
            const Mat g = Mat::unpack(gf, dim, found[processed++]);
            for (const Mat& s : active) {
                const std::uint64_t k = g.mul(s).pack();
                if (seen.insert(k).second) {
                    if (seen.size() > bound)
                        throw BoundExceeded("group closure exceeded the bound", seen.size(),
                                            bound);
                    found.push_back(k);
                }
            }
        }
        bool activated = false;
        while (cursor < gens.size()) {
            const Mat& s = gens[cursor++];
            if (!seen.count(s.pack())) {
                active.push_back(s);
                processed = 0;
                activated = true;
                break;
            }
        }
        if (!activated) break;
    }
    return found;
}

GroupElements::GroupElements(const Field& gf, unsigned dim, std::vector<std::uint64_t> keys)
    : gf_(&gf), dim_(dim), keys_(std::move(keys)) {
    std::sort(keys_.begin(), keys_.end());
}

bool GroupElements::contains(const Mat& g) const {
    return std::binary_search(keys_.begin(), keys_.end(), g.pack());
}

GroupElements enumerate_group(const Space& sp, const GeneratorSet& gens, std::uint64_t bound) {
    if (gens.gens.empty()) throw PreconditionViolated("empty generator set");
    if (gens.claimed_order > bound)
        throw BoundExceeded("group too large to enumerate", gens.claimed_order, bound);
    auto keys = generator_closure(sp.field(), sp.dim(), gens.gens, bound);
    if (keys.size() != gens.claimed_order)
        throw GenerationShortfall(group_label_name(gens.label), keys.size(), gens.claimed_order);
    return GroupElements(sp.field(), sp.dim(), std::move(keys));
}

// ---------------------------------------------------------------------------
// Generator construction

bool satisfies_label(const GeneratorSet& gs, const Space& sp, const Mat& g) {
    switch (gs.label) {
        case GroupLabel::Sp:
            return is_isometry(sp, g);
        case GroupLabel::OPlus:
        case GroupLabel::OMinus:
            return preserves_form(QuadraticForm::from_diagonal(sp, *gs.form_diagonal), g);
        case GroupLabel::VectorStabilizer:
            return is_isometry(sp, g) && g.apply(*gs.fixed_vector) == *gs.fixed_vector;
        case GroupLabel::LineStabilizer:
            return is_isometry(sp, g) &&
                   sp.line_representative(g.apply(*gs.fixed_vector)) ==
                       sp.line_representative(*gs.fixed_vector);
    }
    return false;
}

namespace {

std::vector<Fe> field_basis(const Field& gf) {
    std::vector<Fe> basis;
    for (unsigned k = 0; k < gf.degree(); ++k) basis.push_back(static_cast<Fe>(1u << k));
    return basis;
}

void check_and_repair(GeneratorSet& gs, const Space& sp, const BuildOptions& opts);

GeneratorSet build_unchecked(GroupLabel label, const Space& sp, const BuildOptions& opts) {
    const Field& gf = sp.field();
    const unsigned m = sp.m();
    const unsigned q = gf.size();
    const unsigned n = sp.dim();

    GeneratorSet out;
    out.label = label;

    switch (label) {
        case GroupLabel::Sp: {
            std::vector<Vec> dirs;
            for (unsigned i = 0; i < n; ++i) dirs.push_back(sp.basis_vector(i));
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i + 1; j < n; ++j)
                    dirs.push_back(Space::add(sp.basis_vector(i), sp.basis_vector(j)));
            for (const Vec& v : dirs)
                for (Fe lam : field_basis(gf))
                    out.gens.push_back(symplectic_transvection(sp, v, lam));
            out.claimed_order = sp_order(m, q);
            break;
        }
        case GroupLabel::OPlus:
        case GroupLabel::OMinus: {
            if (sp.num_vectors() > kDefaultEnumBound)
                throw BoundExceeded("transvection direction scan too large", sp.num_vectors(),
                                    kDefaultEnumBound);
            const FormType type = label == GroupLabel::OPlus ? FormType::Plus : FormType::Minus;
            QuadraticForm form = opts.form
                                     ? *opts.form
                                     : (type == FormType::Plus ? standard_plus_form(sp)
                                                               : standard_minus_form(sp));
            if (classify_type(form) != type)
                throw PreconditionViolated("supplied form has the wrong type");
            out.form_diagonal = form.diagonal_over_standard();
            const std::uint64_t total = sp.num_vectors();
            for (std::uint64_t key = 1; key < total; ++key) {
                Vec v = sp.unpack(key);
                if (form.eval(v) != 0)
                    out.gens.push_back(orthogonal_transvection(form, v));
            }
            out.claimed_order = orthogonal_order(m, q, type);
            break;
        }
        case GroupLabel::VectorStabilizer:
        case GroupLabel::LineStabilizer: {
            if (sp.num_vectors() > kDefaultEnumBound)
                throw BoundExceeded("transvection direction scan too large", sp.num_vectors(),
                                    kDefaultEnumBound);
            Vec v = opts.vector ? *opts.vector : sp.basis_vector(0);
            if (sp.is_zero(v)) throw PreconditionViolated("stabilized vector must be nonzero");
            out.fixed_vector = v;
            const std::uint64_t total = sp.num_vectors();
            for (std::uint64_t key = 1; key < total; ++key) {
                Vec w = sp.unpack(key);
                if (sp.bilinear(v, w) != 0) continue;
                for (Fe lam : field_basis(gf))
                    out.gens.push_back(symplectic_transvection(sp, w, lam));
            }
            if (label == GroupLabel::LineStabilizer) {
                out.claimed_order = line_stabilizer_order(m, q);
                if (q > 2) {
                    // torus element scaling v by a generator of the
                    // multiplicative group, acting trivially on the rest of
                    // a hyperbolic basis through v
                    const std::vector<Vec> basis = complete_hyperbolic_basis(sp, {v});
                    Mat b(gf, n);
                    for (unsigned i = 0; i < n; ++i)
                        for (unsigned j = 0; j < n; ++j) b.at(i, j) = basis[i][j];
                    Mat d = Mat::identity(gf, n);
                    d.at(0, 0) = gf.generator();
                    d.at(1, 1) = gf.inv(gf.generator());
                    out.gens.push_back(b.inverse().mul(d).mul(b));
                }
            } else {
                out.claimed_order = vector_stabilizer_order(m, q);
            }
            break;
        }
    }
    return out;
}

void check_and_repair(GeneratorSet& gs, const Space& sp, const BuildOptions& opts) {
    const Field& gf = sp.field();
    if (gs.claimed_order > opts.enum_bound || !Mat::packable(gf, sp.dim())) return;

    auto keys = generator_closure(gf, sp.dim(), gs.gens, opts.enum_bound);
    if (keys.size() == gs.claimed_order) return;
    if (keys.size() > gs.claimed_order || gs.label == GroupLabel::Sp ||
        sp_order(sp.m(), gf.size()) > opts.enum_bound)
        throw GenerationShortfall(group_label_name(gs.label), keys.size(), gs.claimed_order);

    // Closure fell short (O+_4(2) is the classical case): pull missing
    // elements satisfying the label predicate out of the full symplectic
    // group, smallest key first, until the order matches.
    GeneratorSet spg = build_generators(GroupLabel::Sp, sp, opts);
    auto sp_keys = generator_closure(gf, sp.dim(), spg.gens, opts.enum_bound);
    std::sort(sp_keys.begin(), sp_keys.end());

    while (keys.size() < gs.claimed_order) {
        std::unordered_set<std::uint64_t> have(keys.begin(), keys.end());
        bool added = false;
        for (std::uint64_t k : sp_keys) {
            if (have.count(k)) continue;
            Mat g = Mat::unpack(gf, sp.dim(), k);
            if (satisfies_label(gs, sp, g)) {
                gs.gens.push_back(std::move(g));
                added = true;
                break;
            }
        }
        if (!added) throw GenerationShortfall(group_label_name(gs.label), keys.size(),
                                              gs.claimed_order);
        keys = generator_closure(gf, sp.dim(), gs.gens, opts.enum_bound);
        if (keys.size() > gs.claimed_order)
            throw GenerationShortfall(group_label_name(gs.label), keys.size(),
                                      gs.claimed_order);
    }
}

} // namespace

GeneratorSet build_generators(GroupLabel label, const Space& sp, const BuildOptions& opts) {
    GeneratorSet out = build_unchecked(label, sp, opts);
    check_and_repair(out, sp, opts);
    return out;
}

// ---------------------------------------------------------------------------
// Random words

std::vector<Mat> random_elements(const Space& sp, const GeneratorSet& gens, std::size_t count,
                                 std::uint64_t seed, unsigned word_length) {
    if (gens.gens.empty()) throw PreconditionViolated("empty generator set");
    std::vector<Mat> pool = gens.gens;
    pool.reserve(2 * gens.gens.size());
    for (const Mat& g : gens.gens) pool.push_back(g.inverse());

    std::mt19937_64 rng(seed);
    std::vector<Mat> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Mat g = Mat::identity(sp.field(), sp.dim());
        for (unsigned w = 0; w < word_length; ++w)
            g = g.mul(pool[static_cast<std::size_t>(rng() % pool.size())]);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace sympchar
