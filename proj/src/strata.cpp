#include "genera/strata.hpp"

#include <algorithm>
#include <sstream>

namespace genera {

void StratifiedSpace::add_stratum(Stratum s, LevelData ichi_closure) {
    if (strata_.count(s.id)) throw data_error("duplicate stratum id '" + s.id + "'");
    closures_[s.id] = std::move(ichi_closure);
    strata_[s.id] = std::move(s);
    closed_ = false;
}

void StratifiedSpace::add_order(const std::string& lower, const std::string& upper) {
    declared_order_.emplace_back(lower, upper);
    closed_ = false;
}

void StratifiedSpace::add_link(const std::string& lower, const std::string& upper, LevelData link_cone) {
    links_[{lower, upper}] = std::move(link_cone);
}

void StratifiedSpace::close_order() const {
    if (closed_) return;
    less_.clear();
    for (const auto& p : declared_order_) less_.insert(p);
    // Warshall closure over the declared ids.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<IdPair> add;
        for (const auto& [a, b] : less_)
            for (const auto& [c, d] : less_)
                if (b == c && !less_.count({a, d})) add.emplace_back(a, d);
        for (auto& p : add) changed |= less_.insert(std::move(p)).second;
    }
    closed_ = true;
}

bool StratifiedSpace::less(const std::string& w, const std::string& v) const {
    close_order();
    return less_.count({w, v}) != 0;
}

std::vector<std::string> StratifiedSpace::topo_order() const {
    std::vector<std::string> ids;
    ids.reserve(strata_.size());
    for (const auto& [id, s] : strata_) ids.push_back(id);
    std::sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
        int da = strata_.at(a).dim, db = strata_.at(b).dim;
        if (da != db) return da < db;
        return a < b;
    });
    return ids;
}

const std::string& StratifiedSpace::top() const {
    close_order();
    const std::string* best = nullptr;
    for (const auto& [id, s] : strata_) {
        bool maximal = true;
        for (const auto& [jd, t] : strata_)
            if (less(id, jd)) {
                maximal = false;
                break;
            }
        if (maximal) {
            if (best) throw data_error("stratified space has more than one maximal stratum");
            best = &id;
        }
    }
    if (!best) throw data_error("stratified space has no stratum");
    return *best;
}

bool StratifiedSpace::hodge_level() const {
    for (const auto& [id, d] : closures_)
        if (!d.hodge) return false;
    for (const auto& [p, d] : links_)
        if (!d.hodge) return false;
    return !closures_.empty();
}

const LaurentPoly& StratifiedSpace::chi_closure(const std::string& id) const {
    auto it = closures_.find(id);
    if (it == closures_.end()) throw data_error("no closure data for stratum '" + id + "'");
    return it->second.chi;
}

const HodgeClass& StratifiedSpace::hodge_closure(const std::string& id) const {
    auto it = closures_.find(id);
    if (it == closures_.end()) throw data_error("no closure data for stratum '" + id + "'");
    if (!it->second.hodge) throw data_error("stratum '" + id + "' carries chi-level data only");
    return *it->second.hodge;
}

const LaurentPoly& StratifiedSpace::chi_link(const std::string& w, const std::string& v) const {
    auto it = links_.find({w, v});
    if (it == links_.end()) throw data_error("no link data for pair (" + w + ", " + v + ")");
    return it->second.chi;
}

const HodgeClass& StratifiedSpace::hodge_link(const std::string& w, const std::string& v) const {
    auto it = links_.find({w, v});
    if (it == links_.end()) throw data_error("no link data for pair (" + w + ", " + v + ")");
    if (!it->second.hodge) throw data_error("link (" + w + ", " + v + ") carries chi-level data only");
    return *it->second.hodge;
}

std::vector<std::string> StratifiedSpace::validate() const {
    std::vector<std::string> out;
    if (strata_.empty()) {
        out.push_back("space has no strata");
        return out;
    }
    close_order();

    for (const auto& [a, b] : declared_order_) {
        if (!strata_.count(a)) out.push_back("order relation mentions unknown stratum '" + a + "'");
        if (!strata_.count(b)) out.push_back("order relation mentions unknown stratum '" + b + "'");
    }
    if (!out.empty()) return out;  // id errors make the rest unreliable

    for (const auto& [id, s] : strata_)
        if (less(id, id)) out.push_back("order contains a cycle through '" + id + "'");
    if (!out.empty()) return out;

    // Order must strictly decrease dimension downwards.
    for (const auto& [a, b] : less_)
        if (strata_.at(a).dim >= strata_.at(b).dim)
            out.push_back("order must decrease dimension: '" + a + "' < '" + b + "' but dim " +
                          std::to_string(strata_.at(a).dim) + " >= " + std::to_string(strata_.at(b).dim));

    // Unique maximal stratum of maximal dimension.
    std::vector<std::string> maximal;
    int maxdim = 0;
    for (const auto& [id, s] : strata_) maxdim = std::max(maxdim, s.dim);
    for (const auto& [id, s] : strata_) {
        bool is_max = true;
        for (const auto& [jd, t] : strata_)
            if (less(id, jd)) is_max = false;
        if (is_max) maximal.push_back(id);
    }
    if (maximal.size() != 1) {
        std::ostringstream msg;
        msg << "expected exactly one maximal stratum, found " << maximal.size() << " (";
        for (size_t i = 0; i < maximal.size(); ++i) msg << (i ? ", " : "") << "'" << maximal[i] << "'";
        msg << ")";
        out.push_back(msg.str());
    } else if (strata_.at(maximal[0]).dim != maxdim) {
        out.push_back("top stratum '" + maximal[0] + "' does not have maximal dimension");
    }

    // Link data exactly on comparable pairs.
    for (const auto& [a, b] : less_)
        if (!links_.count({a, b})) out.push_back("missing link data for pair (" + a + ", " + b + ")");
    for (const auto& [p, d] : links_) {
        if (!strata_.count(p.first) || !strata_.count(p.second))
            out.push_back("link data mentions unknown stratum ('" + p.first + "', '" + p.second + "')");
        else if (!less_.count(p))
            out.push_back("link data given for incomparable pair ('" + p.first + "', '" + p.second + "')");
    }

    // Uniform data level.
    size_t hodge_count = 0, total = 0;
    for (const auto& [id, d] : closures_) {
        ++total;
        hodge_count += d.hodge ? 1 : 0;
    }
    for (const auto& [p, d] : links_) {
        ++total;
        hodge_count += d.hodge ? 1 : 0;
    }
    if (hodge_count != 0 && hodge_count != total)
        out.push_back("mixed data levels: all strata and links must carry bigrade data, or all chi-level only");

    // Declared-smooth closures force trivial link constant terms.
    for (const auto& [id, s] : strata_) {
        if (!s.smooth) continue;
        for (const auto& [p, d] : links_)
            if (p.second == id && less_.count(p) && d.chi.constant_term() != 1)
                out.push_back("stratum '" + id + "' is declared smooth but link (" + p.first + ", " + id +
                              ") has constant term " + d.chi.constant_term().str());
    }
    return out;
}

void StratifiedSpace::ensure_valid() const {
    auto diags = validate();
    if (diags.empty()) return;
    std::ostringstream msg;
    msg << "invalid stratified space";
    if (!name.empty()) msg << " '" << name << "'";
    for (const auto& d : diags) msg << "\n  - " << d;
    throw data_error(msg.str());
}

std::vector<std::string> monodromy_warnings(const StratifiedSpace& s) {
    std::vector<std::string> out;
    if (s.monodromy_ok) return out;
    for (const auto& [id, st] : s.strata())
        if (!st.simply_connected)
            out.push_back("stratum '" + id +
                          "' is not simply connected; results assume trivial monodromy (set monodromy_ok to "
                          "silence)");
    return out;
}

std::map<std::string, LaurentPoly> hat_ichi(const StratifiedSpace& s) {
    s.ensure_valid();
    return hat_corrections<LaurentPoly>(
        s, [&](const std::string& v) { return s.chi_closure(v); },
        [&](const std::string& w, const std::string& v) { return s.chi_link(w, v); });
}

std::map<std::string, KModuleElement> hat_icc(const StratifiedSpace& s) {
    s.ensure_valid();
    return hat_corrections<KModuleElement>(
        s, [&](const std::string& v) { return KModuleElement::basis(v); },
        [&](const std::string& w, const std::string& v) { return s.hodge_link(w, v); });
}

namespace {

// Unitriangular stalk matrix over the given ids (a sub-poset of s).
UniTriMatrix<HodgeClass> stalk_matrix(const StratifiedSpace& s, const std::vector<std::string>& ids) {
    std::set<std::pair<size_t, size_t>> strict;
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = 0; j < ids.size(); ++j)
            if (s.less(ids[i], ids[j])) strict.insert({i, j});
    UniTriMatrix<HodgeClass> a(ids, strict);
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = 0; j < ids.size(); ++j)
            if (s.less(ids[i], ids[j])) a.set(i, j, s.hodge_link(ids[i], ids[j]));
    return a;
}

const HodgeClass& stalk_at(const std::map<std::string, HodgeClass>& stalks, const std::string& id) {
    auto it = stalks.find(id);
    if (it == stalks.end()) throw data_error("missing stalk for stratum '" + id + "'");
    return it->second;
}

}  // namespace

std::map<std::string, HodgeClass> apply_stalk_map(const StratifiedSpace& s, const KModuleElement& l) {
    std::map<std::string, HodgeClass> out;
    for (const auto& [w, st] : s.strata()) {
        HodgeClass acc = l.coeff(w);
        for (const auto& [v, c] : l.coeffs)
            if (s.less(w, v)) acc += s.hodge_link(w, v) * c;
        out[w] = std::move(acc);
    }
    return out;
}

KModuleElement decompose(const StratifiedSpace& s, const std::map<std::string, HodgeClass>& stalks) {
    s.ensure_valid();
    const std::string& top = s.top();

    KModuleElement l;
    l.set(top, stalk_at(stalks, top));

    std::vector<std::string> sub;
    for (const auto& id : s.topo_order())
        if (id != top) sub.push_back(id);

    if (!sub.empty()) {
        // L'(W) = stalk(W) - a_{W,S} * stalk(S), then invert A on the sub-poset.
        std::map<std::string, HodgeClass> lprime;
        for (const auto& w : sub)
            lprime[w] = stalk_at(stalks, w) - s.hodge_link(w, top) * stalk_at(stalks, top);
        UniTriMatrix<HodgeClass> ainv = stalk_matrix(s, sub).inverse();
        for (size_t i = 0; i < sub.size(); ++i) {
            HodgeClass acc = lprime[sub[i]];  // diagonal term
            for (size_t j = 0; j < sub.size(); ++j)
                if (ainv.strictly_less(i, j)) acc += ainv.entry(i, j) * lprime[sub[j]];
            l.set(sub[i], std::move(acc));
        }
    }

    // The forward map must reproduce the input stalks exactly.
    auto check = apply_stalk_map(s, l);
    for (const auto& [id, st] : s.strata())
        if (check.at(id) != stalk_at(stalks, id))
            throw arithmetic_error("stalk reconstruction failed at stratum '" + id + "'");
    return l;
}

KModuleElement reconstruct_mE(const StratifiedSpace& s, const std::map<std::string, HodgeClass>& stalks) {
    s.ensure_valid();
    const std::string& top = s.top();
    const HodgeClass& top_stalk = stalk_at(stalks, top);

    KModuleElement result = KModuleElement::basis(top) * top_stalk;
    auto hic = hat_icc(s);
    for (const auto& [v, hat] : hic) {
        HodgeClass scalar = stalk_at(stalks, v) - top_stalk * s.hodge_link(v, top);
        result += hat * scalar;
    }
    return result;
}

}  // namespace genera
