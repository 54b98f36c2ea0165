// Independent ground truth for the formula engines: formal-series expansion
// by direct inversion, Hodge-diamond genus values, the additivity route to
// blow-up genera, and seeded random instances for the property suites. Kept
// deliberately free of the correction-term and class machinery it is used to
// check; only ring primitives appear here.
#pragma once

#include <random>
#include <vector>

#include "genera/hodge.hpp"
#include "genera/laurent.hpp"
#include "genera/strata.hpp"

namespace genera::oracle {

// Multiplicative inverse of a power series with a_0 != 0, truncated to the
// input length.
std::vector<Rational> invert_series(const std::vector<Rational>& a);

// Coefficients of x/(1-e^{-x}) obtained by inverting (1-e^{-x})/x.
std::vector<Rational> todd_by_inversion(unsigned n);

// Coefficients of x/tanh(x) = cosh(x) * (sinh(x)/x)^{-1}.
std::vector<Rational> x_over_tanh(unsigned n);

// chi_y of P^n from its Hodge diamond: 1 - y + ... + (-y)^n.
LaurentPoly chi_pn(int n);

// chi_y of a blow-up by additivity of compactly supported genera:
// chi(X) = (chi(Y) - chi(Z)) + chi(Z) * chi(P^r).
LaurentPoly blowup_by_additivity(const LaurentPoly& chi_target, const LaurentPoly& chi_center,
                                 unsigned r);

// Additive Euler characteristic of the domain of a stratified map:
// sum over strata of chi(V) * chi(F_V), with chi(V) of the open stratum
// obtained by inclusion-exclusion of closures at y = -1.
// Used only through its special cases in the tests; see tests for usage.

// ---------------------------------------------------------------------------
// Seeded random instances.

struct Rng {
    explicit Rng(unsigned seed) : gen(seed) {}
    std::mt19937 gen;

    int uniform(int lo, int hi);
    Rational rational(int mag = 9, int den = 4);
    // Integer-coefficient Laurent polynomial, exponents within |e| <= 4.
    LaurentPoly laurent(int max_terms = 4);
    // Bigrades |p|,|q| <= 3, multiplicities in [-5,5].
    HodgeClass hodge(int max_entries = 5);
    // Valid stratified space with <= max_strata strata, Hodge-level data,
    // random link classes.
    StratifiedSpace space(int max_strata);
    std::map<std::string, HodgeClass> stalks(const StratifiedSpace& s);
    // Random unitriangular matrices over the two scalar rings.
    UniTriMatrix<LaurentPoly> unitri_laurent(int max_size);
    UniTriMatrix<HodgeClass> unitri_hodge(int max_size);

private:
    template <typename T, typename F>
    UniTriMatrix<T> unitri(int max_size, F&& entry);
};

}  // namespace genera::oracle
