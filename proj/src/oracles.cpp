#include "genera/oracles.hpp"

#include "genera/errors.hpp"

namespace genera::oracle {

std::vector<Rational> invert_series(const std::vector<Rational>& a) {
    if (a.empty() || a[0] == 0) throw data_error("series has no inverse");
    std::vector<Rational> c(a.size());
    c[0] = Rational(1) / a[0];
    for (size_t m = 1; m < a.size(); ++m) {
        Rational s = 0;
        for (size_t k = 1; k <= m; ++k) s += a[k] * c[m - k];
        c[m] = -s / a[0];
    }
    return c;
}

std::vector<Rational> todd_by_inversion(unsigned n) {
    // (1-e^{-x})/x = sum (-1)^m x^m/(m+1)!
    std::vector<Rational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) a[m] = Rational(Integer(parity_sign(m)), factorial(m + 1));
    return invert_series(a);
}

std::vector<Rational> x_over_tanh(unsigned n) {
    // cosh: 1/(2k)! at even orders; sinh(x)/x: 1/(2k+1)! at even orders.
    std::vector<Rational> cosh_c(n + 1, Rational(0)), sinhx(n + 1, Rational(0));
    for (unsigned m = 0; m <= n; m += 2) {
        cosh_c[m] = Rational(Integer(1), factorial(m));
        sinhx[m] = Rational(Integer(1), factorial(m + 1));
    }
    std::vector<Rational> inv = invert_series(sinhx);
    std::vector<Rational> out(n + 1, Rational(0));
    for (unsigned m = 0; m <= n; ++m)
        for (unsigned k = 0; k <= m; ++k) out[m] += cosh_c[k] * inv[m - k];
    return out;
}

LaurentPoly chi_pn(int n) {
    LaurentPoly p;
    for (int k = 0; k <= n; ++k) p += LaurentPoly::monomial(parity_sign(k), k);
    return p;
}

LaurentPoly blowup_by_additivity(const LaurentPoly& chi_target, const LaurentPoly& chi_center,
                                 unsigned r) {
    return (chi_target - chi_center) + chi_center * chi_pn(static_cast<int>(r));
}

// ---------------------------------------------------------------------------

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

Rational Rng::rational(int mag, int den) {
    return Rational(Integer(uniform(-mag, mag)), Integer(uniform(1, den)));
}

LaurentPoly Rng::laurent(int max_terms) {
    LaurentPoly p;
    int terms = uniform(0, max_terms);
    for (int i = 0; i < terms; ++i)
        p += LaurentPoly::monomial(uniform(-5, 5), uniform(-4, 4));
    return p;
}

HodgeClass Rng::hodge(int max_entries) {
    HodgeClass h;
    int entries = uniform(0, max_entries);
    for (int i = 0; i < entries; ++i)
        h += HodgeClass::entry(uniform(-3, 3), uniform(-3, 3), uniform(-5, 5));
    return h;
}

StratifiedSpace Rng::space(int max_strata) {
    int n = uniform(1, max_strata);
    StratifiedSpace s;
    s.name = "random";
    s.monodromy_ok = true;

    std::vector<std::string> ids;
    std::vector<int> dims;
    for (int i = 0; i + 1 < n; ++i) {
        ids.push_back("s" + std::to_string(i));
        dims.push_back(uniform(0, n));
    }
    int top_dim = 1;
    for (int d : dims) top_dim = std::max(top_dim, d + 1);
    ids.push_back("S");
    dims.push_back(top_dim);

    for (size_t i = 0; i < ids.size(); ++i) {
        Stratum st{ids[i], dims[i], true, false};
        s.add_stratum(st, LevelData::from_hodge(hodge()));
    }
    // Random edges between dimension-increasing pairs; everything sits
    // below the top stratum.
    for (size_t i = 0; i + 1 < ids.size(); ++i) {
        s.add_order(ids[i], ids.back());
        for (size_t j = 0; j + 1 < ids.size(); ++j)
            if (dims[i] < dims[j] && uniform(0, 1)) s.add_order(ids[i], ids[j]);
    }
    for (size_t i = 0; i < ids.size(); ++i)
        for (size_t j = 0; j < ids.size(); ++j)
            if (s.less(ids[i], ids[j])) s.add_link(ids[i], ids[j], LevelData::from_hodge(hodge()));
    return s;
}

std::map<std::string, HodgeClass> Rng::stalks(const StratifiedSpace& s) {
    std::map<std::string, HodgeClass> out;
    for (const auto& [id, st] : s.strata()) out[id] = hodge();
    return out;
}

template <typename T, typename F>
UniTriMatrix<T> Rng::unitri(int max_size, F&& entry) {
    int n = uniform(1, max_size);
    std::vector<std::string> ids;
    std::vector<int> dims;
    for (int i = 0; i < n; ++i) {
        ids.push_back("m" + std::to_string(i));
        dims.push_back(uniform(0, n));
    }
    std::set<std::pair<size_t, size_t>> strict;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dims[i] < dims[j] && uniform(0, 1)) strict.insert({static_cast<size_t>(i), static_cast<size_t>(j)});
    // Transitive closure.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [a, b] : std::set<std::pair<size_t, size_t>>(strict))
            for (const auto& [c, d] : std::set<std::pair<size_t, size_t>>(strict))
                if (b == c) changed |= strict.insert({a, d}).second;
    }
    UniTriMatrix<T> m(ids, strict);
    for (const auto& [i, j] : strict) m.set(i, j, entry());
    return m;
}

UniTriMatrix<LaurentPoly> Rng::unitri_laurent(int max_size) {
    return unitri<LaurentPoly>(max_size, [&] { return laurent(); });
}

UniTriMatrix<HodgeClass> Rng::unitri_hodge(int max_size) {
    return unitri<HodgeClass>(max_size, [&] { return hodge(); });
}

}  // namespace genera::oracle
