#include "genera/classes.hpp"

#include <numeric>

namespace genera {

// ---------------------------------------------------------------------------
// CohomRing / CohomElem

CohomRing::CohomRing(std::vector<int> truncations) : trunc_(std::move(truncations)) {
    for (int t : trunc_)
        if (t < 0) throw data_error("negative truncation in cohomology ring");
}

CohomRing CohomRing::product(const CohomRing& a, const CohomRing& b) {
    std::vector<int> t = a.trunc_;
    t.insert(t.end(), b.trunc_.begin(), b.trunc_.end());
    return CohomRing(std::move(t));
}

int CohomRing::dimension() const { return std::accumulate(trunc_.begin(), trunc_.end(), 0); }

CohomElem CohomElem::constant(const CohomRing& ring, LocalizedElem c) {
    CohomElem e(ring);
    e.set(Exps(ring.generators(), 0), std::move(c));
    return e;
}

CohomElem CohomElem::generator(const CohomRing& ring, size_t g) {
    if (g >= ring.generators()) throw data_error("generator index out of range");
    CohomElem e(ring);
    if (ring.truncation(g) >= 1) {
        Exps exps(ring.generators(), 0);
        exps[g] = 1;
        e.set(exps, LocalizedElem::one());
    }
    return e;
}

LocalizedElem CohomElem::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? LocalizedElem() : it->second;
}

LocalizedElem CohomElem::top_coeff() const {
    Exps top(ring_.generators());
    for (size_t g = 0; g < ring_.generators(); ++g) top[g] = ring_.truncation(g);
    return coeff(top);
}

CohomElem CohomElem::degree_part(int j) const {
    CohomElem r(ring_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == j) r.set(e, c);
    return r;
}

void CohomElem::set(const Exps& e, LocalizedElem c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

void CohomElem::check_ring(const CohomElem& o) const {
    if (ring_ != o.ring_) throw data_error("cohomology ring mismatch");
}

CohomElem& CohomElem::operator+=(const CohomElem& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
    return *this;
}

CohomElem& CohomElem::operator-=(const CohomElem& o) {
    check_ring(o);
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) - c);
    return *this;
}

CohomElem operator*(const CohomElem& a, const CohomElem& b) {
    a.check_ring(b);
    CohomElem r(a.ring_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            CohomElem::Exps e(ea.size());
            bool kept = true;
            for (size_t g = 0; g < e.size(); ++g) {
                e[g] = ea[g] + eb[g];
                if (e[g] > a.ring_.truncation(g)) {
                    kept = false;  // beyond the truncation, exact zero
                    break;
                }
            }
            if (kept) r.set(e, r.coeff(e) + ca * cb);
        }
    return r;
}

CohomElem& CohomElem::operator*=(const CohomElem& o) { return *this = *this * o; }

CohomElem& CohomElem::scale(const LocalizedElem& c) {
    CohomElem r(ring_);
    for (const auto& [e, v] : terms_) r.set(e, v * c);
    return *this = r;
}

CohomElem apply_series(const std::vector<LocalizedElem>& c, const CohomElem& x) {
    CohomElem acc = CohomElem::constant(x.ring(), c.empty() ? LocalizedElem() : c[0]);
    CohomElem xp = CohomElem::unit(x.ring());
    for (size_t m = 1; m < c.size(); ++m) {
        xp = xp * x;
        if (xp.is_zero()) break;
        CohomElem t = xp;
        t.scale(c[m]);
        acc += t;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// T_y class and the lambda-class route

BundleRoots projective_tangent_roots(const CohomRing& ring) {
    if (ring.generators() != 1) throw data_error("projective tangent roots need a one-generator ring");
    BundleRoots b;
    CohomElem h = CohomElem::generator(ring, 0);
    for (int i = 0; i <= ring.truncation(0); ++i) b.roots.push_back(h);
    return b;
}

namespace {

void check_roots(const BundleRoots& b, const CohomRing& ring) {
    for (const auto& r : b.roots) {
        if (r.ring() != ring) throw data_error("Chern root lives in a different ring");
        if (!r.constant_term().is_zero()) throw data_error("Chern root has nonzero constant term");
    }
}

std::vector<LocalizedElem> lift(const std::vector<Rational>& c) {
    std::vector<LocalizedElem> out;
    out.reserve(c.size());
    for (const auto& r : c) out.emplace_back(LaurentPoly(r));
    return out;
}

std::vector<LocalizedElem> lift(const PowerSeries& s) {
    std::vector<LocalizedElem> out;
    out.reserve(s.coeffs.size());
    for (const auto& p : s.coeffs) out.emplace_back(p);
    return out;
}

// exp(-x) truncated.
std::vector<LocalizedElem> exp_neg_coeffs(unsigned n) {
    std::vector<LocalizedElem> c(n + 1);
    for (unsigned m = 0; m <= n; ++m)
        c[m] = LocalizedElem(LaurentPoly(Rational(parity_sign(m), factorial(m))));
    return c;
}

}  // namespace

CohomElem ty_class(const BundleRoots& b, const CohomRing& ring) {
    check_roots(b, ring);
    unsigned n = static_cast<unsigned>(ring.dimension());
    std::vector<LocalizedElem> qy = lift(qy_series(n));
    CohomElem prod = CohomElem::unit(ring);
    for (const auto& root : b.roots) prod *= apply_series(qy, root);
    return prod;
}

CohomElem lambda_class_route(const BundleRoots& b, const CohomRing& ring) {
    check_roots(b, ring);
    int n = ring.dimension();
    unsigned nu = static_cast<unsigned>(n);
    std::vector<LocalizedElem> expneg = exp_neg_coeffs(nu);
    std::vector<LocalizedElem> todd = lift(todd_series_coefficients(nu));
    LocalizedElem y(LaurentPoly::y());

    // ch of the total lambda-class of the virtual cotangent bundle: product
    // of (1 + y e^{-a}) over the roots, divided by (1+y) per virtual trivial
    // summand so the bundle has rank exactly n.
    CohomElem lambda = CohomElem::unit(ring);
    for (const auto& root : b.roots) {
        CohomElem f = apply_series(expneg, root);
        f.scale(y);
        lambda *= CohomElem::unit(ring) + f;
    }
    int excess = static_cast<int>(b.roots.size()) - n;
    if (excess > 0)
        lambda.scale(LocalizedElem::inv_one_plus_y(static_cast<unsigned>(excess)));
    else if (excess < 0)
        lambda.scale(LocalizedElem(pow(LaurentPoly::one() + LaurentPoly::y(), static_cast<unsigned>(-excess))));

    CohomElem td = CohomElem::unit(ring);
    for (const auto& root : b.roots) td *= apply_series(todd, root);

    CohomElem c = lambda * td;

    // (1+y)-twist in complementary cohomological degree: degree j picks up
    // (1+y)^{j-n}.
    CohomElem out(ring);
    for (int j = 0; j <= n; ++j) {
        CohomElem part = c.degree_part(j);
        if (part.is_zero()) continue;
        part.scale(LocalizedElem::inv_one_plus_y(static_cast<unsigned>(n - j)));
        out += part;
    }
    return out;
}

LaurentPoly cap_and_degree(const CohomElem& c, int n) {
    if (n != c.ring().dimension())
        throw data_error("degree extraction dimension does not match the ring truncation");
    LocalizedElem top = c.top_coeff();
    if (!top.denominator_free())
        throw arithmetic_error("degree coefficient keeps a (1+y)-denominator: " + top.to_string());
    return top.num();
}

// ---------------------------------------------------------------------------
// GradedClass

GradedClass GradedClass::point_class(const std::string& basis) {
    GradedClass g;
    g.basis = basis;
    g.parts[0] = LocalizedElem::one();
    return g;
}

LocalizedElem GradedClass::coeff(int k) const {
    auto it = parts.find(k);
    return it == parts.end() ? LocalizedElem() : it->second;
}

void GradedClass::set(int k, LocalizedElem c) {
    if (c.is_zero())
        parts.erase(k);
    else
        parts[k] = std::move(c);
}

namespace {

void merge_basis(std::string& mine, const std::string& other) {
    if (other.empty()) return;
    if (mine.empty()) {
        mine = other;
        return;
    }
    if (mine != other)
        throw data_error("ambient basis mismatch: '" + mine + "' vs '" + other + "'");
}

}  // namespace

GradedClass& GradedClass::operator+=(const GradedClass& o) {
    merge_basis(basis, o.basis);
    for (const auto& [k, c] : o.parts) set(k, coeff(k) + c);
    return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
    merge_basis(basis, o.basis);
    for (const auto& [k, c] : o.parts) set(k, coeff(k) - c);
    return *this;
}

GradedClass operator*(const GradedClass& g, const LocalizedElem& s) {
    GradedClass r;
    r.basis = g.basis;
    for (const auto& [k, c] : g.parts) r.set(k, c * s);
    return r;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
    if (!a.basis.empty() && !b.basis.empty() && a.basis != b.basis) return false;
    return a.parts == b.parts;
}

GradedClass td_twist(const GradedClass& g) {
    GradedClass r;
    r.basis = g.basis;
    for (const auto& [k, c] : g.parts) {
        if (k < 0) throw data_error("negative homological degree in graded class");
        r.set(k, c * LocalizedElem::inv_one_plus_y(static_cast<unsigned>(k)));
    }
    return r;
}

GradedClass graded_from_cohom(const CohomElem& c, const std::string& basis) {
    if (c.ring().generators() != 1)
        throw data_error("graded classes are recorded in cyclic bases; use a one-generator ring");
    int n = c.ring().dimension();
    GradedClass g;
    g.basis = basis;
    for (const auto& [e, coeff] : c.terms()) g.set(n - e[0], coeff);
    return g;
}

GradedClass ty_projective(int n, const std::string& basis) {
    CohomRing ring = CohomRing::projective(n);
    return graded_from_cohom(ty_class(projective_tangent_roots(ring), ring), basis);
}

GradedClass pushforward_ITy(const StratifiedMapData& m,
                            const std::map<std::string, GradedClass>& stratum_classes, FiberMode mode,
                            std::vector<std::string>* warnings) {
    const StratifiedSpace& s = m.space;
    if (warnings)
        for (auto& w : monodromy_warnings(s)) warnings->push_back(std::move(w));
    const std::string& top = s.top();
    auto closure = [&](const std::string& id) -> GradedClass {
        auto it = stratum_classes.find(id);
        if (it == stratum_classes.end())
            throw data_error("missing homology class for stratum closure '" + id + "'");
        return it->second;
    };
    auto link = [&](const std::string& w, const std::string& v) { return s.chi_link(w, v); };
    auto fiber = [&](const std::string& id) -> LaurentPoly {
        if (mode == FiberMode::chi || id == top) return m.fiber_at(id).chi;
        return m.icone_at(id).chi;
    };
    return stratified_pushforward<GradedClass, LaurentPoly>(s, closure, link, fiber);
}

GradedClass smooth_blowup_class(const GradedClass& ty_target, const GradedClass& ty_center_in_target,
                                unsigned r) {
    return ty_target + ty_center_in_target * blowup_exceptional_sum(r);
}

std::map<int, Rational> eval_y(const GradedClass& g, const Rational& r) {
    std::map<int, Rational> out;
    for (const auto& [k, c] : g.parts) {
        Rational v = c.eval(r);
        if (v != 0) out[k] = v;
    }
    return out;
}

}  // namespace genera
