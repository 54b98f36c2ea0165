// Push-forward genus formulas for proper stratified maps. The engine is one
// formula over a module M with scalar ring S,
//
//   result = closure(S_top) * fiber(S_top)
//          + sum_{V < S_top} hat(V) * ( fiber(V) - fiber(S_top) * link(V, S_top) ),
//
// with hat(V) the correction recursion from strata.hpp. At genus level
// M = S = LaurentPoly; the same formula runs over the bigrade ring and over
// (u,v)-polynomials, and chi_y / E intertwine the three exactly.
#pragma once

#include <string>
#include <vector>

#include "genera/strata.hpp"

namespace genera {

struct StratifiedMapData {
    StratifiedSpace space;                          // the target Y
    std::map<std::string, LevelData> fiber;         // top: generic fiber; below: fiber over the stratum
    std::map<std::string, LevelData> icone_preimage;  // below top only; required by I-chi mode

    const LevelData& fiber_at(const std::string& id) const;
    const LevelData& icone_at(const std::string& id) const;
};

template <typename M, typename S, typename ClosF, typename LinkF, typename FibF>
M stratified_pushforward(const StratifiedSpace& sp, ClosF&& closure, LinkF&& link, FibF&& fiber) {
    sp.ensure_valid();
    const std::string& top = sp.top();
    auto hat = hat_corrections<M>(sp, closure, link);
    S generic = fiber(top);
    M result = closure(top) * generic;
    for (const auto& [v, h] : hat) {
        S corr = fiber(v) - generic * link(v, top);
        result += h * corr;
    }
    return result;
}

template <typename R, typename ClosF, typename LinkF>
R chi_from_ichi(const StratifiedSpace& sp, ClosF&& closure, LinkF&& link) {
    sp.ensure_valid();
    const std::string& top = sp.top();
    auto hat = hat_corrections<R>(sp, closure, link);
    R result = closure(top);
    for (const auto& [v, h] : hat) result += h * (R::one() - link(v, top));
    return result;
}

// chi_y(X) of the domain from target data and fibers. Appends
// simple-connectivity warnings when the hypotheses are not declared met.
LaurentPoly pushforward_chi(const StratifiedMapData& m, std::vector<std::string>* warnings = nullptr);
HodgeClass pushforward_chi_hodge(const StratifiedMapData& m, std::vector<std::string>* warnings = nullptr);
BiLaurentPoly pushforward_chi_e(const StratifiedMapData& m, std::vector<std::string>* warnings = nullptr);

// Ichi_y(X): the stratified multiplicative property. Requires cone-preimage
// data below the top stratum.
LaurentPoly pushforward_ichi(const StratifiedMapData& m, std::vector<std::string>* warnings = nullptr);
HodgeClass pushforward_ichi_hodge(const StratifiedMapData& m, std::vector<std::string>* warnings = nullptr);
BiLaurentPoly pushforward_ichi_e(const StratifiedMapData& m, std::vector<std::string>* warnings = nullptr);

// chi_y(Y) computed from intersection-homology data of Y alone.
LaurentPoly chi_vs_ichi(const StratifiedSpace& s, std::vector<std::string>* warnings = nullptr);
HodgeClass chi_vs_ichi_hodge(const StratifiedSpace& s, std::vector<std::string>* warnings = nullptr);

// Multiplicativity for fibrations with trivial monodromy.
inline LaurentPoly fibration_mult(const LaurentPoly& chi_base, const LaurentPoly& chi_fiber) {
    return chi_base * chi_fiber;
}
inline HodgeClass fibration_mult(const HodgeClass& base, const HodgeClass& fiber) { return base * fiber; }
inline BiLaurentPoly fibration_mult(const BiLaurentPoly& base, const BiLaurentPoly& fiber) {
    return base * fiber;
}

// -y + y^2 - ... + (-y)^r; empty for r = 0.
LaurentPoly blowup_exceptional_sum(unsigned r);

// Blow-up along a center of codimension r+1.
LaurentPoly blowup_chi(const LaurentPoly& chi_y_target, const LaurentPoly& chi_y_center, unsigned r);

}  // namespace genera
