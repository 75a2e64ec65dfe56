#include "sympchar/matrix.hpp"

#include <cassert>

#include "sympchar/errors.hpp"

namespace sympchar {

Mat::Mat(const Field& gf, unsigned n) : gf_(&gf), n_(n) {
    if (n == 0 || n > kMaxDim) throw DimensionError("matrix dimension out of range");
}

Mat Mat::identity(const Field& gf, unsigned n) {
    Mat m(gf, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::mul(const Mat& rhs) const {
    assert(n_ == rhs.n_);
    Mat r(*gf_, n_);
    for (unsigned i = 0; i < n_; ++i) {
        for (unsigned k = 0; k < n_; ++k) {
            const Fe aik = at(i, k);
            if (!aik) continue;
            for (unsigned j = 0; j < n_; ++j)
                r.at(i, j) ^= gf_->mul(aik, rhs.at(k, j));
        }
    }
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != n_) throw DimensionError("vector length does not match matrix dimension");
    Vec out(n_, 0);
    apply_into(v.data(), out.data());
    return out;
}

void Mat::apply_into(const Fe* in, Fe* out) const {
    for (unsigned j = 0; j < n_; ++j) out[j] = 0;
    for (unsigned i = 0; i < n_; ++i) {
        const Fe vi = in[i];
        if (!vi) continue;
        for (unsigned j = 0; j < n_; ++j)
            out[j] ^= gf_->mul(vi, at(i, j));
    }
}

Mat Mat::inverse() const {
    Mat a = *this;
    Mat inv = identity(*gf_, n_);
    for (unsigned col = 0; col < n_; ++col) {
        unsigned pivot = col;
        while (pivot < n_ && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n_) throw SingularMatrix("matrix is singular");
        if (pivot != col) {
            for (unsigned j = 0; j < n_; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const Fe s = gf_->inv(a.at(col, col));
        for (unsigned j = 0; j < n_; ++j) {
            a.at(col, j) = gf_->mul(s, a.at(col, j));
            inv.at(col, j) = gf_->mul(s, inv.at(col, j));
        }
        for (unsigned i = 0; i < n_; ++i) {
            if (i == col) continue;
            const Fe c = a.at(i, col);
            if (!c) continue;
            for (unsigned j = 0; j < n_; ++j) {
                a.at(i, j) ^= gf_->mul(c, a.at(col, j));
                inv.at(i, j) ^= gf_->mul(c, inv.at(col, j));
            }
        }
    }
    return inv;
}

bool Mat::is_identity() const {
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned j = 0; j < n_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    if (n_ != o.n_) return false;
    for (unsigned i = 0; i < n_ * n_; ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

std::uint64_t Mat::pack() const {
    const unsigned f = gf_->degree();
    if (!packable(*gf_, n_)) throw BoundExceeded("matrix does not fit a 64-bit key", n_ * n_ * f, 64);
    std::uint64_t key = 0;
    for (unsigned i = n_ * n_; i-- > 0;) key = (key << f) | a_[i];
    return key;
}

Mat Mat::unpack(const Field& gf, unsigned n, std::uint64_t key) {
    Mat m(gf, n);
    const unsigned f = gf.degree();
    const std::uint64_t mask = (1u << f) - 1;
    for (unsigned i = 0; i < n * n; ++i) {
        m.a_[i] = static_cast<Fe>(key & mask);
        key >>= f;
    }
    return m;
}

std::uint64_t pack_vector(const Field& gf, const Fe* v, unsigned n) {
    const unsigned f = gf.degree();
    std::uint64_t key = 0;
    for (unsigned i = n; i-- > 0;) key = (key << f) | v[i];
    return key;
}

void unpack_vector(const Field& gf, std::uint64_t key, Fe* v, unsigned n) {
    const unsigned f = gf.degree();
    const std::uint64_t mask = (1u << f) - 1;
    for (unsigned i = 0; i < n; ++i) {
        v[i] = static_cast<Fe>(key & mask);
        key >>= f;
    }
}

} // namespace sympchar
