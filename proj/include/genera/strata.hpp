// Stratification posets with link-cone data, and the inductive calculus on
// them:
//
//   hat(V) = base(V) - sum_{W<V} hat(W) * link(W,V)
//
// run in topological order (ascending dimension, then id). Instantiated at
// genus level this is the hat-Ichi correction; over the Grothendieck-group
// module it is the hat-IC recursion whose columns invert the unitriangular
// stalk matrix a_{W,V}. The same inversion identifies the coefficients of a
// class on the IC basis from its stalks (decompose), and the closed
// reconstruction formula must agree with it exactly.
//
// A space carries either full bigrade (Hodge) data or chi-level data only;
// chi values are always available, Hodge accessors throw in chi-only mode.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "genera/errors.hpp"
#include "genera/hodge.hpp"
#include "genera/laurent.hpp"

namespace genera {

struct Stratum {
    std::string id;
    int dim = 0;                   // complex dimension
    bool simply_connected = true;
    bool smooth = false;           // declared-smooth closure, validation hook
};

// Per-stratum or per-link payload: bigrade table when available, chi image
// always.
struct LevelData {
    std::optional<HodgeClass> hodge;
    LaurentPoly chi;

    static LevelData from_hodge(HodgeClass h) {
        LevelData d;
        d.chi = chi_y_class(h);
        d.hodge = std::move(h);
        return d;
    }
    static LevelData from_chi(LaurentPoly c) {
        LevelData d;
        d.chi = std::move(c);
        return d;
    }
};

using IdPair = std::pair<std::string, std::string>;

class StratifiedSpace {
public:
    std::string name;
    bool monodromy_ok = false;

    void add_stratum(Stratum s, LevelData ichi_closure);
    void add_order(const std::string& lower, const std::string& upper);
    void add_link(const std::string& lower, const std::string& upper, LevelData link_cone);

    const std::map<std::string, Stratum>& strata() const { return strata_; }
    bool has_stratum(const std::string& id) const { return strata_.count(id) != 0; }

    // Strict comparability after transitive closure.
    bool less(const std::string& w, const std::string& v) const;
    bool leq(const std::string& w, const std::string& v) const { return w == v || less(w, v); }
    // Ascending (dim, id); the top stratum comes last in a valid space.
    std::vector<std::string> topo_order() const;
    const std::string& top() const;

    bool hodge_level() const;
    const LaurentPoly& chi_closure(const std::string& id) const;
    const HodgeClass& hodge_closure(const std::string& id) const;
    const LaurentPoly& chi_link(const std::string& w, const std::string& v) const;
    const HodgeClass& hodge_link(const std::string& w, const std::string& v) const;

    // All invariant checks; empty result means valid.
    std::vector<std::string> validate() const;
    void ensure_valid() const;

private:
    void close_order() const;
    std::map<std::string, Stratum> strata_;
    std::map<std::string, LevelData> closures_;
    std::map<IdPair, LevelData> links_;
    std::vector<IdPair> declared_order_;
    mutable std::set<IdPair> less_;  // transitive closure, rebuilt on demand
    mutable bool closed_ = false;
};

// Warnings about unmet simple-connectivity hypotheses (empty when
// monodromy_ok or all strata are simply connected).
std::vector<std::string> monodromy_warnings(const StratifiedSpace& s);

// ---------------------------------------------------------------------------
// Unitriangular matrices over a commutative ring with respect to a poset.
// The diagonal is implicitly the ring unit; entries exist only for strictly
// comparable index pairs.

template <typename T>
class UniTriMatrix {
public:
    UniTriMatrix(std::vector<std::string> ids, std::set<std::pair<size_t, size_t>> strict)
        : ids_(std::move(ids)), strict_(std::move(strict)) {}

    const std::vector<std::string>& ids() const { return ids_; }
    size_t size() const { return ids_.size(); }
    size_t index(const std::string& id) const {
        for (size_t i = 0; i < ids_.size(); ++i)
            if (ids_[i] == id) return i;
        throw data_error("unknown id '" + id + "' in matrix poset");
    }
    bool strictly_less(size_t i, size_t j) const { return strict_.count({i, j}) != 0; }

    void set(size_t i, size_t j, T value) {
        if (!strictly_less(i, j)) throw data_error("matrix entry outside the poset order");
        if (value.is_zero())
            entries_.erase({i, j});
        else
            entries_[{i, j}] = std::move(value);
    }
    void set(const std::string& w, const std::string& v, T value) { set(index(w), index(v), std::move(value)); }

    // Unit on the diagonal, stored value or zero elsewhere.
    T entry(size_t i, size_t j) const {
        if (i == j) return T::one();
        auto it = entries_.find({i, j});
        return it == entries_.end() ? T() : it->second;
    }
    T entry(const std::string& w, const std::string& v) const { return entry(index(w), index(v)); }

    UniTriMatrix multiply(const UniTriMatrix& o) const {
        UniTriMatrix r(ids_, strict_);
        for (size_t i = 0; i < size(); ++i)
            for (size_t j = 0; j < size(); ++j) {
                if (!strictly_less(i, j)) continue;
                T acc = entry(i, j) + o.entry(i, j);  // t = i and t = j terms
                for (size_t t = 0; t < size(); ++t)
                    if (strictly_less(i, t) && strictly_less(t, j)) acc += entry(i, t) * o.entry(t, j);
                r.set(i, j, std::move(acc));
            }
        return r;
    }

    // Incidence-algebra inversion: a'_{V,V} = 1 and for W < V
    //   a'_{W,V} = - sum_{W <= T < V} a'_{W,T} a_{T,V}.
    UniTriMatrix inverse() const {
        UniTriMatrix r(ids_, strict_);
        for (size_t j : topo_indices()) {
            for (size_t i = 0; i < size(); ++i) {
                if (!strictly_less(i, j)) continue;
                T acc = entry(i, j);  // T = W term, a'_{W,W} = 1
                for (size_t t = 0; t < size(); ++t)
                    if (strictly_less(i, t) && strictly_less(t, j)) acc += r.entry(i, t) * entry(t, j);
                r.set(i, j, -acc);
            }
        }
        return r;
    }

    // Ancestor-count order; valid because the relation is transitively closed.
    std::vector<size_t> topo_indices() const {
        std::vector<size_t> idx(size()), anc(size(), 0);
        for (const auto& [i, j] : strict_) ++anc[j];
        for (size_t i = 0; i < size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return anc[a] < anc[b]; });
        return idx;
    }

    bool is_identity() const {
        for (const auto& [ij, v] : entries_)
            if (!v.is_zero()) return false;
        return true;
    }

private:
    std::vector<std::string> ids_;
    std::set<std::pair<size_t, size_t>> strict_;
    std::map<std::pair<size_t, size_t>, T> entries_;
};

// ---------------------------------------------------------------------------
// Correction-term recursion, generic over a module M with scalar ring S.

template <typename M, typename BaseF, typename LinkF>
std::map<std::string, M> hat_corrections(const StratifiedSpace& sp, BaseF&& base, LinkF&& link) {
    std::map<std::string, M> hat;
    const std::string& top = sp.top();
    for (const auto& v : sp.topo_order()) {
        if (v == top) continue;
        M h = base(v);
        for (const auto& [w, done] : hat)
            if (sp.less(w, v)) h -= done * link(w, v);
        hat.emplace(v, std::move(h));
    }
    return hat;
}

// hat-Ichi at genus level, for every V below the top stratum.
std::map<std::string, LaurentPoly> hat_ichi(const StratifiedSpace& s);

// ---------------------------------------------------------------------------
// Grothendieck-group coefficient vectors on the IC basis.

struct KModuleElement {
    std::map<std::string, HodgeClass> coeffs;  // zero classes omitted

    static KModuleElement basis(const std::string& id) {
        KModuleElement e;
        e.coeffs[id] = HodgeClass::one();
        return e;
    }
    HodgeClass coeff(const std::string& id) const {
        auto it = coeffs.find(id);
        return it == coeffs.end() ? HodgeClass() : it->second;
    }
    void set(const std::string& id, HodgeClass h) {
        if (h.is_zero())
            coeffs.erase(id);
        else
            coeffs[id] = std::move(h);
    }
    KModuleElement& operator+=(const KModuleElement& o) {
        for (const auto& [id, h] : o.coeffs) set(id, coeff(id) + h);
        return *this;
    }
    KModuleElement& operator-=(const KModuleElement& o) {
        for (const auto& [id, h] : o.coeffs) set(id, coeff(id) - h);
        return *this;
    }
    // Scalar action of the Grothendieck ring.
    friend KModuleElement operator*(const KModuleElement& e, const HodgeClass& s) {
        KModuleElement r;
        for (const auto& [id, h] : e.coeffs) r.set(id, h * s);
        return r;
    }
    friend bool operator==(const KModuleElement& a, const KModuleElement& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const KModuleElement& a, const KModuleElement& b) { return !(a == b); }
};

// hat-IC recursion: coefficients of the corrected IC classes on the basis
// {[IC of Wbar] : W <= V}, for every V below the top stratum.
std::map<std::string, KModuleElement> hat_icc(const StratifiedSpace& s);

// Coefficient identification from stalks: L with [M] = sum_V [IC of Vbar] L(V),
// given stalks(V) = pullback of [M] at a point of V. Solves the unitriangular
// system and verifies the forward reconstruction exactly.
KModuleElement decompose(const StratifiedSpace& s, const std::map<std::string, HodgeClass>& stalks);

// Closed-form right-hand side of the main decomposition identity; equals
// decompose on the nose.
KModuleElement reconstruct_mE(const StratifiedSpace& s, const std::map<std::string, HodgeClass>& stalks);

// Stalk matrix (over the full poset) applied to a coefficient vector; the
// forward direction of decompose, exposed for round-trip checks.
std::map<std::string, HodgeClass> apply_stalk_map(const StratifiedSpace& s, const KModuleElement& l);

}  // namespace genera
