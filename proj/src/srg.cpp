#include "sympchar/srg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace sympchar {

PerpGraph PerpGraph::build(const Space& sp, std::uint64_t bound) {
    const GSet lines = GSet::lines(sp, bound);
    PerpGraph g;
    g.n_ = lines.size();
    g.words_ = (g.n_ + 63) / 64;
    g.rows_.assign(g.n_ * g.words_, 0);
    std::vector<Vec> reps(g.n_);
    for (std::size_t i = 0; i < g.n_; ++i) reps[i] = lines.vector_at(i);
    for (std::size_t a = 0; a < g.n_; ++a) {
        for (std::size_t b = a + 1; b < g.n_; ++b) {
            if (sp.bilinear(reps[a], reps[b]) == 0) {
                g.rows_[a * g.words_ + b / 64] |= std::uint64_t{1} << (b % 64);
                g.rows_[b * g.words_ + a / 64] |= std::uint64_t{1} << (a % 64);
            }
        }
    }
    return g;
}

std::size_t PerpGraph::degree(std::size_t a) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[a * words_ + w]);
    return d;
}

std::size_t PerpGraph::common_neighbors(std::size_t a, std::size_t b) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w)
        c += std::popcount(rows_[a * words_ + w] & rows_[b * words_ + w]);
    return c;
}

SrgParams expected_srg_params(unsigned m, unsigned q) {
    auto powq = [&](unsigned e) {
        std::uint64_t r = 1;
        for (unsigned i = 0; i < e; ++i) r *= q;
        return r;
    };
    SrgParams p;
    p.v = (powq(2 * m) - 1) / (q - 1);
    p.k = (powq(2 * m - 1) - q) / (q - 1);
    p.mu = (powq(2 * m - 2) - 1) / (q - 1);
    p.lam = p.mu - 2;
    return p;
}

SrgParams verify_srg(const Space& sp) {
    if (sp.m() < 2)
        throw DegenerateCase("the perp graph on a hyperbolic plane is edgeless; need m >= 2");
    const PerpGraph g = PerpGraph::build(sp);
    const std::size_t n = g.num_vertices();

    SrgParams p;
    p.v = n;
    p.k = g.degree(0);
    for (std::size_t a = 1; a < n; ++a)
        if (g.degree(a) != p.k) throw Error("perp graph is not regular");

    bool have_lam = false, have_mu = false;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::size_t c = g.common_neighbors(a, b);
            if (g.adjacent(a, b)) {
                if (!have_lam) {
                    p.lam = c;
                    have_lam = true;
                } else if (p.lam != c) {
                    throw Error("adjacent pairs disagree on common neighbors");
                }
            } else {
                if (!have_mu) {
                    p.mu = c;
                    have_mu = true;
                } else if (p.mu != c) {
                    throw Error("non-adjacent pairs disagree on common neighbors");
                }
            }
        }
    }
    if (!have_lam || !have_mu) throw Error("graph is complete or empty; not strongly regular");

    // feasibility identity k(k - lam - 1) = (v - k - 1) mu
    if (p.k * (p.k - p.lam - 1) != (p.v - p.k - 1) * p.mu)
        throw Error("measured parameters fail the feasibility identity");
    return p;
}

namespace {

std::uint64_t exact_isqrt(std::uint64_t x) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    if (r * r != x) throw NonIntegralMultiplicity("eigenvalue discriminant is not a square");
    return r;
}

} // namespace

SpectrumMultiplicities spectrum_multiplicities(const SrgParams& p) {
    const std::int64_t v = static_cast<std::int64_t>(p.v);
    const std::int64_t k = static_cast<std::int64_t>(p.k);
    const std::int64_t lam = static_cast<std::int64_t>(p.lam);
    const std::int64_t mu = static_cast<std::int64_t>(p.mu);

    const std::int64_t disc = (lam - mu) * (lam - mu) + 4 * (k - mu);
    const std::int64_t root = static_cast<std::int64_t>(exact_isqrt(static_cast<std::uint64_t>(disc)));
    if ((lam - mu + root) % 2 != 0)
        throw NonIntegralMultiplicity("eigenvalues are not integers");

    SpectrumMultiplicities s;
    s.r = (lam - mu + root) / 2;
    s.s = (lam - mu - root) / 2;

    const std::int64_t num = 2 * k + (v - 1) * (lam - mu);
    if (num % root != 0 || ((v - 1) - num / root) % 2 != 0)
        throw NonIntegralMultiplicity("multiplicity formula does not divide exactly");
    s.mult_r = static_cast<std::uint64_t>(((v - 1) - num / root) / 2);
    s.mult_s = static_cast<std::uint64_t>(((v - 1) + num / root) / 2);

    if (s.mult_r + s.mult_s != p.v - 1 ||
        k + static_cast<std::int64_t>(s.mult_r) * s.r + static_cast<std::int64_t>(s.mult_s) * s.s != 0)
        throw NonIntegralMultiplicity("trace conditions fail for the computed multiplicities");
    return s;
}

ChiDegrees chi_degrees(const Space& sp) {
    const SrgParams p = verify_srg(sp);
    const SpectrumMultiplicities s = spectrum_multiplicities(p);
    ChiDegrees d;
    d.chi_minus = std::min(s.mult_r, s.mult_s);
    d.chi_plus = std::max(s.mult_r, s.mult_s);

    // closed forms ((q^(2m) - q)/(q-1) -+ q^m)/2
    const unsigned q = sp.field().size();
    std::uint64_t q2m = 1, qm = 1;
    for (unsigned i = 0; i < 2 * sp.m(); ++i) q2m *= q;
    for (unsigned i = 0; i < sp.m(); ++i) qm *= q;
    const std::uint64_t base = (q2m - q) / (q - 1);
    if (d.chi_minus != (base - qm) / 2 || d.chi_plus != (base + qm) / 2)
        throw Error("multiplicities disagree with the closed forms");
    return d;
}

std::uint64_t verify_rank3(const Space& sp, const GeneratorSet& sp_gens,
                           std::uint64_t max_product) {
    const GSet lines = GSet::lines(sp);
    return char_inner_product(lines, lines, sp_gens, max_product);
}

} // namespace sympchar
