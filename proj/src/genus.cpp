#include "genera/genus.hpp"

namespace genera {

const LevelData& StratifiedMapData::fiber_at(const std::string& id) const {
    auto it = fiber.find(id);
    if (it == fiber.end()) throw data_error("missing fiber data for stratum '" + id + "'");
    return it->second;
}

const LevelData& StratifiedMapData::icone_at(const std::string& id) const {
    auto it = icone_preimage.find(id);
    if (it == icone_preimage.end())
        throw data_error("missing cone-preimage data for stratum '" + id + "'");
    return it->second;
}

namespace {

// Data access per computation level; the formulas are level-agnostic.
struct ChiLevel {
    using R = LaurentPoly;
    static R closure(const StratifiedSpace& s, const std::string& id) { return s.chi_closure(id); }
    static R link(const StratifiedSpace& s, const std::string& w, const std::string& v) {
        return s.chi_link(w, v);
    }
    static R data(const LevelData& d) { return d.chi; }
};

struct HodgeLevel {
    using R = HodgeClass;
    static R closure(const StratifiedSpace& s, const std::string& id) { return s.hodge_closure(id); }
    static R link(const StratifiedSpace& s, const std::string& w, const std::string& v) {
        return s.hodge_link(w, v);
    }
    static R data(const LevelData& d) {
        if (!d.hodge) throw data_error("bigrade-level data requested but only chi-level data present");
        return *d.hodge;
    }
};

struct ELevel {
    using R = BiLaurentPoly;
    static R closure(const StratifiedSpace& s, const std::string& id) {
        return e_poly(s.hodge_closure(id));
    }
    static R link(const StratifiedSpace& s, const std::string& w, const std::string& v) {
        return e_poly(s.hodge_link(w, v));
    }
    static R data(const LevelData& d) {
        if (!d.hodge) throw data_error("E-polynomial level requested but only chi-level data present");
        return e_poly(*d.hodge);
    }
};

void emit_warnings(const StratifiedSpace& s, std::vector<std::string>* warnings) {
    if (!warnings) return;
    for (auto& w : monodromy_warnings(s)) warnings->push_back(std::move(w));
}

template <typename L>
typename L::R pushforward_chi_impl(const StratifiedMapData& m, std::vector<std::string>* warnings) {
    emit_warnings(m.space, warnings);
    const StratifiedSpace& s = m.space;
    return stratified_pushforward<typename L::R, typename L::R>(
        s, [&](const std::string& id) { return L::closure(s, id); },
        [&](const std::string& w, const std::string& v) { return L::link(s, w, v); },
        [&](const std::string& id) { return L::data(m.fiber_at(id)); });
}

template <typename L>
typename L::R pushforward_ichi_impl(const StratifiedMapData& m, std::vector<std::string>* warnings) {
    emit_warnings(m.space, warnings);
    const StratifiedSpace& s = m.space;
    const std::string& top = s.top();
    return stratified_pushforward<typename L::R, typename L::R>(
        s, [&](const std::string& id) { return L::closure(s, id); },
        [&](const std::string& w, const std::string& v) { return L::link(s, w, v); },
        [&](const std::string& id) { return L::data(id == top ? m.fiber_at(id) : m.icone_at(id)); });
}

template <typename L>
typename L::R chi_vs_ichi_impl(const StratifiedSpace& s, std::vector<std::string>* warnings) {
    emit_warnings(s, warnings);
    return chi_from_ichi<typename L::R>(
        s, [&](const std::string& id) { return L::closure(s, id); },
        [&](const std::string& w, const std::string& v) { return L::link(s, w, v); });
}

}  // namespace

LaurentPoly pushforward_chi(const StratifiedMapData& m, std::vector<std::string>* warnings) {
    return pushforward_chi_impl<ChiLevel>(m, warnings);
}
HodgeClass pushforward_chi_hodge(const StratifiedMapData& m, std::vector<std::string>* warnings) {
    return pushforward_chi_impl<HodgeLevel>(m, warnings);
}
BiLaurentPoly pushforward_chi_e(const StratifiedMapData& m, std::vector<std::string>* warnings) {
    return pushforward_chi_impl<ELevel>(m, warnings);
}

LaurentPoly pushforward_ichi(const StratifiedMapData& m, std::vector<std::string>* warnings) {
    return pushforward_ichi_impl<ChiLevel>(m, warnings);
}
HodgeClass pushforward_ichi_hodge(const StratifiedMapData& m, std::vector<std::string>* warnings) {
    return pushforward_ichi_impl<HodgeLevel>(m, warnings);
}
BiLaurentPoly pushforward_ichi_e(const StratifiedMapData& m, std::vector<std::string>* warnings) {
    return pushforward_ichi_impl<ELevel>(m, warnings);
}

LaurentPoly chi_vs_ichi(const StratifiedSpace& s, std::vector<std::string>* warnings) {
    return chi_vs_ichi_impl<ChiLevel>(s, warnings);
}
HodgeClass chi_vs_ichi_hodge(const StratifiedSpace& s, std::vector<std::string>* warnings) {
    return chi_vs_ichi_impl<HodgeLevel>(s, warnings);
}

LaurentPoly blowup_exceptional_sum(unsigned r) {
    LaurentPoly s;
    for (unsigned i = 1; i <= r; ++i) s += LaurentPoly::monomial(parity_sign(i), static_cast<int>(i));
    return s;
}

LaurentPoly blowup_chi(const LaurentPoly& chi_y_target, const LaurentPoly& chi_y_center, unsigned r) {
    return chi_y_target + chi_y_center * blowup_exceptional_sum(r);
}

}  // namespace genera
