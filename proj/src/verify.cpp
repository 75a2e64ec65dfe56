#include "sympchar/verify.hpp"

#include <chrono>
#include <sstream>
#include <unordered_map>

namespace sympchar {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

CheckRecord record(const std::string& id, unsigned m, unsigned q, std::int64_t computed,
                   std::int64_t expected, std::string provenance, double ms,
                   std::string note = {}) {
    CheckRecord r;
    r.check_id = id;
    r.m = m;
    r.q = q;
    r.computed = computed;
    r.expected = expected;
    r.provenance = std::move(provenance);
    r.pass = computed == expected;
    r.elapsed_ms = ms;
    r.note = std::move(note);
    return r;
}

std::uint64_t powu(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::string mat_to_string(const Mat& g) {
    std::ostringstream os;
    os << "[";
    for (unsigned i = 0; i < g.dim(); ++i) {
        os << (i ? ",[" : "[");
        for (unsigned j = 0; j < g.dim(); ++j) os << (j ? "," : "") << int(g.at(i, j));
        os << "]";
    }
    os << "]";
    return os.str();
}

void require_rank3_scale(const Space& sp, const char* what) {
    if (sp.m() < 2)
        throw DegenerateCase(std::string(what) + " needs m >= 2 (no vectors orthogonal to v "
                                                 "outside <v> in a hyperbolic plane)");
}

std::size_t count_fixed(const GSet& domain, const PreparedElement& pe) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < domain.size(); ++i)
        if (domain.apply(i, pe) == i) ++n;
    return n;
}

/// How many value-classes of `code` coincide exactly with an orbit.
std::size_t classes_matching_orbits(const Orbits& orb, const std::vector<std::uint64_t>& code) {
    std::unordered_map<std::uint64_t, std::uint64_t> class_size;
    std::unordered_map<std::uint64_t, std::uint32_t> class_orbit;
    std::unordered_map<std::uint64_t, bool> uniform;
    for (std::size_t i = 0; i < code.size(); ++i) {
        auto [it, fresh] = class_orbit.try_emplace(code[i], orb.orbit_of[i]);
        ++class_size[code[i]];
        if (fresh)
            uniform[code[i]] = true;
        else if (it->second != orb.orbit_of[i])
            uniform[code[i]] = false;
    }
    std::size_t matched = 0;
    for (const auto& [c, ok] : uniform)
        if (ok && class_size[c] == orb.sizes[class_orbit[c]]) ++matched;
    return matched;
}

} // namespace

void VerificationReport::merge(VerificationReport other) {
    for (auto& r : other.records) records.push_back(std::move(r));
}

std::size_t VerificationReport::passed() const {
    std::size_t n = 0;
    for (const auto& r : records)
        if (r.pass) ++n;
    return n;
}

// ---------------------------------------------------------------------------
// CaseContext

CaseContext::CaseContext(unsigned m, unsigned f, std::uint64_t enum_bound,
                         std::uint64_t group_bound)
    : gf_(f), sp_(gf_, m), enum_bound_(enum_bound), group_bound_(group_bound) {}

namespace {

BuildOptions bounded(std::uint64_t group_bound) {
    BuildOptions opts;
    opts.enum_bound = group_bound;
    return opts;
}

} // namespace

const GeneratorSet& CaseContext::sp_gens() {
    if (!sp_gens_) sp_gens_ = build_generators(GroupLabel::Sp, sp_, bounded(group_bound_));
    return *sp_gens_;
}

const GeneratorSet& CaseContext::stabilizer_gens() {
    if (!gv_gens_)
        gv_gens_ = build_generators(GroupLabel::VectorStabilizer, sp_, bounded(group_bound_));
    return *gv_gens_;
}

const GeneratorSet& CaseContext::oplus_gens() {
    if (!oplus_gens_)
        oplus_gens_ = build_generators(GroupLabel::OPlus, sp_, bounded(group_bound_));
    return *oplus_gens_;
}

const GeneratorSet& CaseContext::ominus_gens() {
    if (!ominus_gens_)
        ominus_gens_ = build_generators(GroupLabel::OMinus, sp_, bounded(group_bound_));
    return *ominus_gens_;
}

const GroupElements& CaseContext::sp_elements() {
    if (!sp_elements_) sp_elements_ = enumerate_group(sp_, sp_gens(), group_bound_);
    return *sp_elements_;
}

const GSet& CaseContext::vectors() {
    if (!vectors_) vectors_ = GSet::nonzero_vectors(sp_, enum_bound_);
    return *vectors_;
}

const GSet& CaseContext::forms_plus() {
    if (!forms_plus_) forms_plus_ = GSet::forms(sp_, FormType::Plus, enum_bound_);
    return *forms_plus_;
}

const GSet& CaseContext::forms_minus() {
    if (!forms_minus_) forms_minus_ = GSet::forms(sp_, FormType::Minus, enum_bound_);
    return *forms_minus_;
}

const GSet& CaseContext::lines() {
    if (!lines_) lines_ = GSet::lines(sp_, enum_bound_);
    return *lines_;
}

// ---------------------------------------------------------------------------
// Field checks

VerificationReport verify_field(const Field& gf) {
    VerificationReport rep;
    const unsigned q = gf.size();
    const unsigned m = 0; // field checks are case-independent; m is reported as 0

    {
        Timer t;
        std::int64_t bad = 0;
        for (unsigned a = 0; a < q; ++a) {
            for (unsigned b = 0; b < q; ++b) {
                const Fe fa = static_cast<Fe>(a), fb = static_cast<Fe>(b);
                if (gf.mul(fa, fb) != gf.mul(fb, fa)) ++bad;
                for (unsigned c = 0; c < q; ++c) {
                    const Fe fc = static_cast<Fe>(c);
                    if (gf.mul(gf.mul(fa, fb), fc) != gf.mul(fa, gf.mul(fb, fc))) ++bad;
                    if (gf.mul(fa, Field::add(fb, fc)) !=
                        Field::add(gf.mul(fa, fb), gf.mul(fa, fc)))
                        ++bad;
                }
            }
            if (a) {
                const Fe fa = static_cast<Fe>(a);
                if (gf.mul(fa, gf.inv(fa)) != 1) ++bad;
            }
            if (gf.mul(static_cast<Fe>(a), 1) != a) ++bad;
        }
        rep.add(record("fields.axioms", m, q, bad, 0, "field axioms, exhaustive", t.ms()));
    }
    {
        Timer t;
        std::int64_t bad = 0;
        std::vector<bool> hit(q, false);
        for (unsigned a = 0; a < q; ++a) {
            const Fe fa = static_cast<Fe>(a);
            hit[gf.frobenius(fa)] = true;
            for (unsigned b = 0; b < q; ++b) {
                const Fe fb = static_cast<Fe>(b);
                if (gf.frobenius(Field::add(fa, fb)) !=
                    Field::add(gf.frobenius(fa), gf.frobenius(fb)))
                    ++bad;
                if (gf.frobenius(gf.mul(fa, fb)) != gf.mul(gf.frobenius(fa), gf.frobenius(fb)))
                    ++bad;
            }
            Fe y = fa;
            for (unsigned i = 0; i < gf.degree(); ++i) y = gf.frobenius(y);
            if (y != fa) ++bad;
        }
        for (unsigned a = 0; a < q; ++a)
            if (!hit[a]) ++bad;
        rep.add(record("fields.frobenius", m, q, bad, 0,
                       "x -> x^2 is an order-f field automorphism", t.ms()));
    }
    {
        Timer t;
        const std::vector<Fe> img = gf.artin_schreier_image();
        rep.add(record("fields.artin_schreier", m, q, static_cast<std::int64_t>(img.size()),
                       q / 2, "|{a + a^2}| = q/2", t.ms()));
        Timer t2;
        std::int64_t mismatch = 0;
        std::vector<bool> in_img(q, false);
        for (Fe v : img) in_img[v] = true;
        for (unsigned a = 0; a < q; ++a)
            if (in_img[a] != (gf.trace(static_cast<Fe>(a)) == 0)) ++mismatch;
        rep.add(record("fields.trace_kernel", m, q, mismatch, 0, "{a + a^2} = ker Tr", t2.ms()));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Equations (1)-(4)

VerificationReport verify_eq1(CaseContext& cx) {
    require_rank3_scale(cx.space(), "the stabilizer orbit count");
    Timer t;
    const Orbits orb = orbit_count(cx.stabilizer_gens(), cx.vectors());
    VerificationReport rep;
    rep.add(record("eq1.stabilizer_orbits", cx.m(), cx.q(),
                   static_cast<std::int64_t>(orb.count), 2 * cx.q() - 1, "2q-1", t.ms()));
    return rep;
}

VerificationReport verify_eq2(CaseContext& cx, std::uint64_t max_product) {
    VerificationReport rep;
    const std::int64_t want = cx.q() / 2 + 1;
    {
        Timer t;
        const auto ip = char_inner_product(cx.forms_plus(), cx.forms_plus(), cx.sp_gens(),
                                           max_product);
        rep.add(record("eq2.plus", cx.m(), cx.q(), static_cast<std::int64_t>(ip), want, "q/2+1",
                       t.ms()));
    }
    {
        Timer t;
        const auto ip = char_inner_product(cx.forms_minus(), cx.forms_minus(), cx.sp_gens(),
                                           max_product);
        rep.add(record("eq2.minus", cx.m(), cx.q(), static_cast<std::int64_t>(ip), want, "q/2+1",
                       t.ms()));
    }
    return rep;
}

VerificationReport verify_eq3(CaseContext& cx, std::uint64_t max_product) {
    Timer t;
    const auto ip =
        char_inner_product(cx.forms_plus(), cx.forms_minus(), cx.sp_gens(), max_product);
    VerificationReport rep;
    rep.add(record("eq3.mixed", cx.m(), cx.q(), static_cast<std::int64_t>(ip), cx.q() / 2, "q/2",
                   t.ms()));
    return rep;
}

VerificationReport verify_eq4(CaseContext& cx, std::uint64_t max_product) {
    require_rank3_scale(cx.space(), "the vector/form inner product");
    VerificationReport rep;
    {
        Timer t;
        const auto ip =
            char_inner_product(cx.vectors(), cx.forms_plus(), cx.sp_gens(), max_product);
        rep.add(record("eq4.plus", cx.m(), cx.q(), static_cast<std::int64_t>(ip), cx.q(), "q",
                       t.ms()));
    }
    {
        Timer t;
        const auto ip =
            char_inner_product(cx.vectors(), cx.forms_minus(), cx.sp_gens(), max_product);
        rep.add(record("eq4.minus", cx.m(), cx.q(), static_cast<std::int64_t>(ip), cx.q(), "q",
                       t.ms()));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Orbit structure

VerificationReport verify_orbit_structure(CaseContext& cx) {
    require_rank3_scale(cx.space(), "the orbit structure check");
    VerificationReport rep;
    const Space& sp = cx.space();
    const Field& gf = sp.field();
    const unsigned m = cx.m(), q = cx.q();
    const GSet& vectors = cx.vectors();
    const Vec v = sp.basis_vector(0);

    {
        // stabilizer orbits: q-1 singletons {lv}, the perp class, q-1 level classes
        Timer t;
        const Orbits orb = orbit_count(cx.stabilizer_gens(), vectors);
        std::vector<std::uint64_t> code(vectors.size());
        std::uint64_t perp_size = 0, level_one_size = 0;
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            const Vec x = vectors.vector_at(i);
            const Fe c = sp.bilinear(v, x);
            bool prop = false;
            if (c == 0) {
                const Fe lam = x[0]; // v = e1, so a multiple of v is (lam, 0, ..., 0)
                prop = sp.scale(lam, v) == x && lam != 0;
                if (prop)
                    code[i] = 0x10000u | lam;
                else {
                    code[i] = 0x20000u;
                    ++perp_size;
                }
            } else {
                code[i] = 0x30000u | c;
                if (c == 1) ++level_one_size;
            }
        }
        rep.add(record("orbits.stabilizer_classes", m, q,
                       static_cast<std::int64_t>(classes_matching_orbits(orb, code)), 2 * q - 1,
                       "q-1 singletons + perp class + q-1 level classes", t.ms()));
        rep.add(record("orbits.perp_class_size", m, q, static_cast<std::int64_t>(perp_size),
                       static_cast<std::int64_t>(powu(q, 2 * m - 1) - q), "q^(2m-1)-q", 0.0));
        rep.add(record("orbits.level_class_size", m, q, static_cast<std::int64_t>(level_one_size),
                       static_cast<std::int64_t>(powu(q, 2 * m - 1)), "q^(2m-1)", 0.0));
    }

    const auto level_orbit_check = [&](const GeneratorSet& gens, const char* id) {
        Timer t;
        const QuadraticForm form = QuadraticForm::from_diagonal(sp, *gens.form_diagonal);
        const Orbits orb = orbit_count(gens, vectors);
        std::vector<std::uint64_t> code(vectors.size());
        for (std::size_t i = 0; i < vectors.size(); ++i)
            code[i] = form.eval(vectors.vector_at(i));
        rep.add(record(id, m, q, static_cast<std::int64_t>(classes_matching_orbits(orb, code)),
                       q, "the q level sets of Q", t.ms()));
    };
    level_orbit_check(cx.oplus_gens(), "orbits.plus_level_orbits");
    level_orbit_check(cx.ominus_gens(), "orbits.minus_level_orbits");

    {
        Timer t;
        const Orbits orb = orbit_count(cx.ominus_gens(), cx.forms_plus());
        const auto as_size = static_cast<std::int64_t>(gf.artin_schreier_image().size());
        rep.add(record("orbits.minus_on_plus_forms", m, q, static_cast<std::int64_t>(orb.count),
                       q / 2, "q/2 = |{a+a^2}|", t.ms(),
                       as_size == q / 2 ? "" : "Artin-Schreier image size disagrees"));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Theorem and corollary

namespace {

struct PointwiseScan {
    std::int64_t tested = 0;
    std::int64_t holding = 0;
    std::string first_failure;
};

template <typename NextElement>
PointwiseScan scan_elements(CaseContext& cx, std::int64_t count, bool theorem,
                            NextElement&& next) {
    PointwiseScan out;
    const GSet& vectors = cx.vectors();
    const GSet& plus = cx.forms_plus();
    const GSet& minus = cx.forms_minus();
    for (std::int64_t i = 0; i < count; ++i) {
        const Mat g = next(i);
        const PreparedElement pe = vectors.prepare(g);
        const auto fp = static_cast<std::int64_t>(count_fixed(plus, pe));
        const auto fm = static_cast<std::int64_t>(count_fixed(minus, pe));
        bool ok;
        if (theorem) {
            const auto fv = static_cast<std::int64_t>(count_fixed(vectors, pe));
            ok = 1 + fv == fp + fm;
        } else {
            ok = fp + fm >= 1;
        }
        ++out.tested;
        if (ok)
            ++out.holding;
        else if (out.first_failure.empty())
            out.first_failure = "counterexample g = " + mat_to_string(g);
    }
    return out;
}

VerificationReport pointwise_check(CaseContext& cx, VerifyMode mode, const SampleSpec& sample,
                                   bool theorem) {
    Timer t;
    PointwiseScan scan;
    std::string note;
    if (mode == VerifyMode::Exhaustive) {
        const GroupElements& els = cx.sp_elements();
        scan = scan_elements(cx, static_cast<std::int64_t>(els.size()), theorem,
                             [&](std::int64_t i) { return els.at(static_cast<std::size_t>(i)); });
        note = "exhaustive over " + std::to_string(els.size()) + " elements";
    } else {
        const std::vector<Mat> els =
            random_elements(cx.space(), cx.sp_gens(), sample.count, sample.seed);
        scan = scan_elements(cx, static_cast<std::int64_t>(els.size()), theorem,
                             [&](std::int64_t i) { return els[static_cast<std::size_t>(i)]; });
        note = "sampled(count=" + std::to_string(sample.count) +
               ", seed=" + std::to_string(sample.seed) + ")";
    }
    if (!scan.first_failure.empty()) note += "; " + scan.first_failure;

    VerificationReport rep;
    rep.add(record(theorem ? "theorem.pointwise" : "corollary.fixes_form", cx.m(), cx.q(),
                   scan.holding, scan.tested,
                   theorem ? "1 + pi_0(g) = pi^+(g) + pi^-(g)" : "pi^+(g) + pi^-(g) >= 1",
                   t.ms(), note));
    return rep;
}

} // namespace

VerificationReport verify_theorem(CaseContext& cx, VerifyMode mode, const SampleSpec& sample) {
    return pointwise_check(cx, mode, sample, true);
}

VerificationReport verify_corollary(CaseContext& cx, VerifyMode mode, const SampleSpec& sample) {
    return pointwise_check(cx, mode, sample, false);
}

// ---------------------------------------------------------------------------
// Strongly regular graph suite and degree identities

VerificationReport verify_srg_suite(CaseContext& cx) {
    const unsigned m = cx.m(), q = cx.q();
    VerificationReport rep;
    Timer t;
    const SrgParams measured = verify_srg(cx.space());
    const SrgParams expect = expected_srg_params(m, q);
    const double ms = t.ms();
    rep.add(record("srg.v", m, q, static_cast<std::int64_t>(measured.v),
                   static_cast<std::int64_t>(expect.v), "(q^(2m)-1)/(q-1)", ms));
    rep.add(record("srg.k", m, q, static_cast<std::int64_t>(measured.k),
                   static_cast<std::int64_t>(expect.k), "(q^(2m-1)-q)/(q-1)", 0.0));
    rep.add(record("srg.lambda", m, q, static_cast<std::int64_t>(measured.lam),
                   static_cast<std::int64_t>(expect.lam), "(q^(2m-2)-1)/(q-1)-2", 0.0));
    rep.add(record("srg.mu", m, q, static_cast<std::int64_t>(measured.mu),
                   static_cast<std::int64_t>(expect.mu), "(q^(2m-2)-1)/(q-1)", 0.0));

    Timer t2;
    const ChiDegrees chi = chi_degrees(cx.space());
    const std::uint64_t base = (powu(q, 2 * m) - q) / (q - 1);
    const std::uint64_t qm = powu(q, m);
    rep.add(record("srg.chi_minus", m, q, static_cast<std::int64_t>(chi.chi_minus),
                   static_cast<std::int64_t>((base - qm) / 2), "((q^(2m)-q)/(q-1)-q^m)/2",
                   t2.ms()));
    rep.add(record("srg.chi_plus", m, q, static_cast<std::int64_t>(chi.chi_plus),
                   static_cast<std::int64_t>((base + qm) / 2), "((q^(2m)-q)/(q-1)+q^m)/2", 0.0));
    return rep;
}

VerificationReport verify_rank3_check(CaseContext& cx, std::uint64_t max_product) {
    require_rank3_scale(cx.space(), "the rank-3 check");
    Timer t;
    const std::uint64_t ip = verify_rank3(cx.space(), cx.sp_gens(), max_product);
    VerificationReport rep;
    rep.add(record("rank3.lines", cx.m(), cx.q(), static_cast<std::int64_t>(ip), 3,
                   "rank-3 inner product", t.ms()));
    return rep;
}

VerificationReport verify_degree_identities(CaseContext& cx) {
    require_rank3_scale(cx.space(), "the degree identities");
    const unsigned m = cx.m(), q = cx.q();
    Timer t;
    const ChiDegrees chi = chi_degrees(cx.space());
    const std::uint64_t qm = powu(q, m);
    const std::uint64_t q2m = powu(q, 2 * m);
    const std::uint64_t omega_plus = qm * (qm + 1) / 2;
    const std::uint64_t omega_minus = qm * (qm - 1) / 2;
    const std::uint64_t pi_prime = (q / 2 - 1) * ((q2m - 1) / (q - 1));
    const double ms = t.ms();

    VerificationReport rep;
    rep.add(record("degrees.plus_forms", m, q, static_cast<std::int64_t>(omega_plus),
                   static_cast<std::int64_t>(1 + chi.chi_plus + pi_prime),
                   "q^m(q^m+1)/2 = 1 + chi^+(1) + (q/2-1)(q^(2m)-1)/(q-1)", ms));
    rep.add(record("degrees.minus_forms", m, q, static_cast<std::int64_t>(omega_minus),
                   static_cast<std::int64_t>(1 + chi.chi_minus + pi_prime),
                   "q^m(q^m-1)/2 = 1 + chi^-(1) + (q/2-1)(q^(2m)-1)/(q-1)", 0.0));
    rep.add(record("degrees.total", m, q, static_cast<std::int64_t>(q2m - 1),
                   static_cast<std::int64_t>(1 + chi.chi_plus + chi.chi_minus + 2 * pi_prime),
                   "q^(2m)-1 = 1 + chi^+(1) + chi^-(1) + 2 pi'(1)", 0.0));
    return rep;
}

} // namespace sympchar
