#include "sympchar/gset.hpp"

#include <algorithm>

namespace sympchar {

GSet::GSet(const Space& sp, Kind kind) : sp_(&sp), kind_(kind) {}

GSet GSet::nonzero_vectors(const Space& sp, std::uint64_t bound) {
    const std::uint64_t total = sp.num_vectors();
    if (total > bound) throw BoundExceeded("vector domain over the bound", total, bound);
    GSet x(sp, Kind::NonzeroVectors);
    x.size_ = total - 1;
    return x;
}

GSet GSet::forms(const Space& sp, FormType type, std::uint64_t bound) {
    const std::uint64_t total = sp.num_vectors();
    if (total > bound) throw BoundExceeded("form domain over the bound", total, bound);
    GSet x(sp, type == FormType::Plus ? Kind::FormsPlus : Kind::FormsMinus);

    // One form per diagonal d (Q = Q+ + diag(d)); the Arf invariant on the
    // canonical hyperbolic basis picks out the requested type.
    const std::vector<Vec> basis = complete_hyperbolic_basis(sp);
    const Field& gf = sp.field();
    x.lookup_.assign(total, -1);
    for (std::uint64_t key = 0; key < total; ++key) {
        const QuadraticForm q = QuadraticForm::from_diagonal(sp, sp.unpack(key));
        Fe arf = 0;
        for (unsigned t = 0; t < sp.m(); ++t)
            arf ^= gf.mul(q.eval(basis[2 * t]), q.eval(basis[2 * t + 1]));
        const FormType ft = gf.trace(arf) == 0 ? FormType::Plus : FormType::Minus;
        if (ft == type) {
            x.lookup_[key] = static_cast<std::int32_t>(x.keys_.size());
            x.keys_.push_back(key);
        }
    }
    x.size_ = x.keys_.size();
    return x;
}

GSet GSet::lines(const Space& sp, std::uint64_t bound) {
    const std::uint64_t total = sp.num_vectors();
    if (total > bound) throw BoundExceeded("line domain over the bound", total, bound);
    GSet x(sp, Kind::Lines);
    x.lookup_.assign(total, -1);
    // First pass: register canonical representatives in ascending key order.
    for (std::uint64_t key = 1; key < total; ++key) {
        const Vec v = sp.unpack(key);
        if (sp.line_representative(v) == v) {
            x.lookup_[key] = static_cast<std::int32_t>(x.keys_.size());
            x.keys_.push_back(key);
        }
    }
    // Second pass: route every nonzero vector to its line.
    for (std::uint64_t key = 1; key < total; ++key) {
        if (x.lookup_[key] < 0)
            x.lookup_[key] = x.lookup_[sp.pack(sp.line_representative(sp.unpack(key)))];
    }
    x.size_ = x.keys_.size();
    return x;
}

Vec GSet::vector_at(std::size_t i) const {
    switch (kind_) {
        case Kind::NonzeroVectors: return sp_->unpack(i + 1);
        case Kind::Lines: return sp_->unpack(keys_[i]);
        default: throw DimensionError("domain does not hold vectors");
    }
}

QuadraticForm GSet::form_at(std::size_t i) const {
    if (kind_ != Kind::FormsPlus && kind_ != Kind::FormsMinus)
        throw DimensionError("domain does not hold forms");
    return QuadraticForm::from_diagonal(*sp_, sp_->unpack(keys_[i]));
}

std::size_t GSet::index_of_vector(const Vec& v) const {
    switch (kind_) {
        case Kind::NonzeroVectors: {
            const std::uint64_t key = sp_->pack(v);
            if (key == 0) throw DimensionError("zero vector is not in the domain");
            return key - 1;
        }
        case Kind::Lines: {
            const std::int32_t i = lookup_[sp_->pack(v)];
            if (i < 0) throw DimensionError("vector spans no registered line");
            return static_cast<std::size_t>(i);
        }
        default: throw DimensionError("domain does not hold vectors");
    }
}

std::size_t GSet::index_of_form(const QuadraticForm& q) const {
    if (kind_ != Kind::FormsPlus && kind_ != Kind::FormsMinus)
        throw DimensionError("domain does not hold forms");
    const std::int32_t i = lookup_[sp_->pack(q.diagonal_over_standard())];
    if (i < 0) throw DimensionError("form is not in this domain");
    return static_cast<std::size_t>(i);
}

PreparedElement GSet::prepare(const Mat& g) const {
    const Field& gf = sp_->field();
    const unsigned n = sp_->dim();
    PreparedElement pe{g, g.inverse(), {}, {}};
    for (unsigned j = 0; j < n; ++j) {
        Fe qp = 0;
        for (unsigned t = 0; t < n; t += 2)
            qp ^= gf.mul(pe.ginv.at(j, t), pe.ginv.at(j, t + 1));
        pe.qplus_on_inv_rows[j] = qp;
        for (unsigned i = 0; i < n; ++i)
            pe.sq_inv[j * n + i] = gf.sqr(pe.ginv.at(j, i));
    }
    return pe;
}

std::size_t GSet::apply(std::size_t idx, const PreparedElement& pe) const {
    const Field& gf = sp_->field();
    const unsigned n = sp_->dim();
    std::array<Fe, Mat::kMaxDim> in{}, out{};
    switch (kind_) {
        case Kind::NonzeroVectors: {
            unpack_vector(gf, idx + 1, in.data(), n);
            pe.g.apply_into(in.data(), out.data());
            return pack_vector(gf, out.data(), n) - 1;
        }
        case Kind::FormsPlus:
        case Kind::FormsMinus: {
            // image diagonal of Q∘g^{-1}: d'_j = Q+(b_j) + sum_i b_ji^2 d_i
            unpack_vector(gf, keys_[idx], in.data(), n);
            for (unsigned j = 0; j < n; ++j) {
                Fe dj = pe.qplus_on_inv_rows[j];
                for (unsigned i = 0; i < n; ++i) dj ^= gf.mul(pe.sq_inv[j * n + i], in[i]);
                out[j] = dj;
            }
            const std::int32_t i = lookup_[pack_vector(gf, out.data(), n)];
            if (i < 0) throw Error("action left the form domain (element not symplectic?)");
            return static_cast<std::size_t>(i);
        }
        case Kind::Lines: {
            unpack_vector(gf, keys_[idx], in.data(), n);
            pe.g.apply_into(in.data(), out.data());
            const std::int32_t i = lookup_[pack_vector(gf, out.data(), n)];
            if (i < 0) throw Error("action left the line domain");
            return static_cast<std::size_t>(i);
        }
    }
    throw Error("unreachable");
}

std::vector<std::uint32_t> GSet::permutation(const Mat& g) const {
    const PreparedElement pe = prepare(g);
    std::vector<std::uint32_t> img(size_);
    for (std::size_t i = 0; i < size_; ++i)
        img[i] = static_cast<std::uint32_t>(apply(i, pe));
    return img;
}

std::size_t fixed_points(const Mat& g, const GSet& domain) {
    const PreparedElement pe = domain.prepare(g);
    std::size_t count = 0;
    for (std::size_t i = 0; i < domain.size(); ++i)
        if (domain.apply(i, pe) == i) ++count;
    return count;
}

Orbits orbit_count(const GeneratorSet& gens, const GSet& domain) {
    std::vector<std::vector<std::uint32_t>> perms;
    perms.reserve(gens.gens.size());
    for (const Mat& g : gens.gens) perms.push_back(domain.permutation(g));

    Orbits out;
    out.orbit_of.assign(domain.size(), UINT32_MAX);
    std::vector<std::uint32_t> stack;
    for (std::size_t start = 0; start < domain.size(); ++start) {
        if (out.orbit_of[start] != UINT32_MAX) continue;
        const auto id = static_cast<std::uint32_t>(out.count++);
        out.representatives.push_back(start);
        std::uint64_t orbit_size = 0;
        out.orbit_of[start] = id;
        stack.push_back(static_cast<std::uint32_t>(start));
        while (!stack.empty()) {
            const std::uint32_t x = stack.back();
            stack.pop_back();
            ++orbit_size;
            for (const auto& perm : perms) {
                const std::uint32_t y = perm[x];
                if (out.orbit_of[y] == UINT32_MAX) {
                    out.orbit_of[y] = id;
                    stack.push_back(y);
                }
            }
        }
        out.sizes.push_back(orbit_size);
    }
    return out;
}

std::uint64_t char_inner_product(const GSet& x, const GSet& y, const GeneratorSet& gens,
                                 std::uint64_t max_product) {
    const std::uint64_t nx = x.size(), ny = y.size();
    if (nx == 0 || ny == 0) return 0;
    if (nx > max_product / ny)
        throw BoundExceeded("product domain over the bound", nx * ny, max_product);

    std::vector<std::vector<std::uint32_t>> px, py;
    for (const Mat& g : gens.gens) {
        px.push_back(x.permutation(g));
        py.push_back(y.permutation(g));
    }

    const std::uint64_t total = nx * ny;
    std::vector<bool> visited(total, false);
    std::vector<std::uint64_t> stack;
    std::uint64_t orbits = 0;
    for (std::uint64_t start = 0; start < total; ++start) {
        if (visited[start]) continue;
        ++orbits;
        visited[start] = true;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::uint64_t p = stack.back();
            stack.pop_back();
            const std::uint64_t ix = p / ny, iy = p % ny;
            for (std::size_t s = 0; s < px.size(); ++s) {
                const std::uint64_t q = static_cast<std::uint64_t>(px[s][ix]) * ny + py[s][iy];
                if (!visited[q]) {
                    visited[q] = true;
                    stack.push_back(q);
                }
            }
        }
    }
    return orbits;
}

} // namespace sympchar
