// Characteristic-class layer: truncated cohomology rings with formal Chern
// roots, the modified Todd class built from the Q_y series, the lambda-class
// route through the twisted Todd transformation, and the push-forward
// formula for homology Hirzebruch classes.
//
// Cohomology rings are Q[y,y^-1,(1+y)^-1]-coefficient polynomial rings in
// one generator per projective factor, truncated at h_i^{n_i+1} = 0. Graded
// homology classes are recorded relative to a declared cyclic basis per
// even degree (for projective space: classes of linear subspaces), which
// covers every ambient space used here.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "genera/genus.hpp"
#include "genera/localized.hpp"
#include "genera/series.hpp"

namespace genera {

class CohomRing {
public:
    CohomRing() = default;
    explicit CohomRing(std::vector<int> truncations);
    static CohomRing projective(int n) { return CohomRing({n}); }
    static CohomRing product(const CohomRing& a, const CohomRing& b);

    size_t generators() const { return trunc_.size(); }
    int truncation(size_t g) const { return trunc_.at(g); }
    // Total degree of the top cell = ambient complex dimension.
    int dimension() const;

    friend bool operator==(const CohomRing& a, const CohomRing& b) { return a.trunc_ == b.trunc_; }
    friend bool operator!=(const CohomRing& a, const CohomRing& b) { return !(a == b); }

private:
    std::vector<int> trunc_;
};

class CohomElem {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, LocalizedElem>;

    explicit CohomElem(CohomRing ring) : ring_(std::move(ring)) {}
    static CohomElem constant(const CohomRing& ring, LocalizedElem c);
    static CohomElem unit(const CohomRing& ring) { return constant(ring, LocalizedElem::one()); }
    static CohomElem generator(const CohomRing& ring, size_t g);

    const CohomRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LocalizedElem coeff(const Exps& e) const;
    LocalizedElem constant_term() const { return coeff(Exps(ring_.generators(), 0)); }
    // Coefficient of the top cell h_1^{n_1} ... h_g^{n_g}.
    LocalizedElem top_coeff() const;
    // Terms of total cohomological degree j.
    CohomElem degree_part(int j) const;

    CohomElem& operator+=(const CohomElem& o);
    CohomElem& operator-=(const CohomElem& o);
    CohomElem& operator*=(const CohomElem& o);
    CohomElem& scale(const LocalizedElem& c);

    friend CohomElem operator+(CohomElem a, const CohomElem& b) { return a += b; }
    friend CohomElem operator-(CohomElem a, const CohomElem& b) { return a -= b; }
    friend CohomElem operator*(const CohomElem& a, const CohomElem& b);
    friend bool operator==(const CohomElem& a, const CohomElem& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const CohomElem& a, const CohomElem& b) { return !(a == b); }

private:
    void set(const Exps& e, LocalizedElem c);
    void check_ring(const CohomElem& o) const;
    CohomRing ring_;
    TermMap terms_;
};

// Sum of c[m] * x^m; stops once powers of x vanish by nilpotence.
CohomElem apply_series(const std::vector<LocalizedElem>& c, const CohomElem& x);

struct BundleRoots {
    std::vector<CohomElem> roots;  // each with zero constant term
};

// Euler-sequence roots of the tangent bundle of P^n: n+1 copies of h.
BundleRoots projective_tangent_roots(const CohomRing& ring);

// Product of Q_y(alpha_i) over the Chern roots, truncated at the ring
// dimension. Throws data_error on a root with nonzero constant term.
CohomElem ty_class(const BundleRoots& b, const CohomRing& ring);

// Same class through the lambda-class normalization: the total lambda-class
// of the (virtual) cotangent bundle times the Todd class, then the
// (1+y)-twist applied in complementary cohomological degree. Equals
// ty_class identically.
CohomElem lambda_class_route(const BundleRoots& b, const CohomRing& ring);

// Coefficient of the top cell; n must be the ring dimension and the result
// must lie in Q[y,y^-1] (a surviving (1+y)-denominator throws
// arithmetic_error, signalling inconsistent input).
LaurentPoly cap_and_degree(const CohomElem& c, int n);

// ---------------------------------------------------------------------------
// Graded Borel-Moore classes, one coefficient per even homological degree
// relative to a declared ambient basis.

struct GradedClass {
    std::string basis;                   // ambient basis label; "" is compatible with anything
    std::map<int, LocalizedElem> parts;  // homological degree (complex units) -> coefficient

    static GradedClass point_class(const std::string& basis);

    LocalizedElem coeff(int k) const;
    void set(int k, LocalizedElem c);
    bool is_zero() const { return parts.empty(); }

    GradedClass& operator+=(const GradedClass& o);
    GradedClass& operator-=(const GradedClass& o);

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator*(const GradedClass& g, const LocalizedElem& s);
    friend GradedClass operator*(const GradedClass& g, const LaurentPoly& s) {
        return g * LocalizedElem(s);
    }
    friend bool operator==(const GradedClass& a, const GradedClass& b);
    friend bool operator!=(const GradedClass& a, const GradedClass& b) { return !(a == b); }
};

// Twisted Todd transformation on graded classes: degree-k component times
// (1+y)^{-k}.
GradedClass td_twist(const GradedClass& g);

// Poincare pairing for a single-generator ring: coefficient of h^{n-k}
// becomes the degree-k homology component.
GradedClass graded_from_cohom(const CohomElem& c, const std::string& basis);

// T_y(P^n) in the linear-subspace basis.
GradedClass ty_projective(int n, const std::string& basis);

enum class FiberMode { chi, ichi };

// Push forward of the homology Hirzebruch class of the domain, expressed in
// the ambient basis of the target. stratum_classes must provide the class of
// every stratum closure. FiberMode::ichi consumes cone-preimage data,
// FiberMode::chi consumes per-stratum fiber data.
GradedClass pushforward_ITy(const StratifiedMapData& m,
                            const std::map<std::string, GradedClass>& stratum_classes,
                            FiberMode mode = FiberMode::ichi,
                            std::vector<std::string>* warnings = nullptr);

// Blow-up push-forward along a smooth center of codimension r+1, both
// classes in the same ambient basis.
GradedClass smooth_blowup_class(const GradedClass& ty_target, const GradedClass& ty_center_in_target,
                                unsigned r);

// Substitutes a concrete y into every component (y != -1 where a
// denominator survives).
std::map<int, Rational> eval_y(const GradedClass& g, const Rational& r);

}  // namespace genera
