#include "genera/toric.hpp"

#include <sstream>

#include "genera/errors.hpp"

namespace genera {

std::vector<std::string> Fan::validate() const {
    std::vector<std::string> out;
    if (dim < 0) out.push_back("fan has negative ambient dimension");
    size_t zero_cones = 0;
    for (const auto& c : cones) {
        if (c.dim < 0 || c.dim > dim)
            out.push_back("cone '" + c.id + "' has dimension " + std::to_string(c.dim) +
                          " outside [0, " + std::to_string(dim) + "]");
        if (c.dim == 0) ++zero_cones;
    }
    if (zero_cones != 1)
        out.push_back("fan must contain exactly one zero-dimensional cone, found " +
                      std::to_string(zero_cones));
    return out;
}

void Fan::ensure_valid() const {
    auto diags = validate();
    if (diags.empty()) return;
    std::ostringstream msg;
    msg << "invalid fan";
    for (const auto& d : diags) msg << "\n  - " << d;
    throw data_error(msg.str());
}

std::vector<size_t> Fan::cone_counts() const {
    std::vector<size_t> counts(static_cast<size_t>(dim) + 1, 0);
    for (const auto& c : cones)
        if (c.dim >= 0 && c.dim <= dim) ++counts[static_cast<size_t>(c.dim)];
    return counts;
}

BiLaurentPoly ec_from_fan(const Fan& f) {
    f.ensure_valid();
    BiLaurentPoly uv_minus_1 = BiLaurentPoly::monomial(1, 1, 1) - BiLaurentPoly::one();
    BiLaurentPoly e;
    for (const auto& c : f.cones) e += pow(uv_minus_1, static_cast<unsigned>(f.dim - c.dim));
    return e;
}

Fan projective_space_fan(int n) {
    if (n < 0) throw data_error("projective space dimension must be nonnegative");
    Fan f;
    f.dim = n;
    // Rays e_1..e_n and e_0 = -(e_1+...+e_n); cones are spanned by the
    // proper subsets, C(n+1, k) of them per dimension k.
    std::vector<std::vector<long long>> rays;
    for (int i = 1; i <= n; ++i) {
        std::vector<long long> e(n, 0);
        e[i - 1] = 1;
        rays.push_back(e);
    }
    rays.push_back(std::vector<long long>(n, -1));

    unsigned total = 1u << (n + 1);
    for (unsigned mask = 0; mask < total; ++mask) {
        int k = __builtin_popcount(mask);
        if (k > n) continue;  // the full set spans no cone of the fan
        Cone c;
        c.dim = k;
        std::ostringstream id;
        id << "c";
        for (int i = 0; i <= n; ++i)
            if (mask & (1u << i)) {
                id << "_" << i;
                c.rays.push_back(rays[static_cast<size_t>(i)]);
            }
        c.id = id.str();
        f.cones.push_back(std::move(c));
    }
    return f;
}

Fan hirzebruch_surface_fan(long long a) {
    Fan f;
    f.dim = 2;
    std::vector<std::vector<long long>> rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
    f.cones.push_back({"c", 0, {}});
    for (size_t i = 0; i < 4; ++i) f.cones.push_back({"r" + std::to_string(i), 1, {rays[i]}});
    for (size_t i = 0; i < 4; ++i) {
        size_t j = (i + 1) % 4;
        f.cones.push_back({"s" + std::to_string(i), 2, {rays[i], rays[j]}});
    }
    return f;
}

Fan product_fan(const Fan& a, const Fan& b) {
    a.ensure_valid();
    b.ensure_valid();
    Fan f;
    f.dim = a.dim + b.dim;
    for (const auto& ca : a.cones)
        for (const auto& cb : b.cones) {
            Cone c;
            c.id = ca.id + "x" + cb.id;
            c.dim = ca.dim + cb.dim;
            for (const auto& r : ca.rays) {
                std::vector<long long> v = r;
                v.resize(static_cast<size_t>(f.dim), 0);
                c.rays.push_back(std::move(v));
            }
            for (const auto& r : cb.rays) {
                std::vector<long long> v(static_cast<size_t>(a.dim), 0);
                v.insert(v.end(), r.begin(), r.end());
                c.rays.push_back(std::move(v));
            }
            f.cones.push_back(std::move(c));
        }
    return f;
}

HodgeClass projective_diamond(int n) {
    HodgeClass h;
    for (int p = 0; p <= n; ++p) h += HodgeClass::entry(p, p, 1);
    return h;
}

namespace {

int int_param(const std::vector<std::string>& params, size_t i, const std::string& kind) {
    if (i >= params.size()) throw data_error("missing parameter for standard space '" + kind + "'");
    try {
        return std::stoi(params[i]);
    } catch (const std::exception&) {
        throw data_error("bad parameter '" + params[i] + "' for standard space '" + kind + "'");
    }
}

// Two-stratum ambient model: center < top inside a smooth target.
StandardExample smooth_blowup_model(const std::string& name, int center_dim, int top_dim,
                                    const HodgeClass& center_closure, const HodgeClass& top_closure,
                                    const HodgeClass& exceptional_fiber) {
    StandardExample ex;
    ex.space.name = name;
    Stratum center{"Z", center_dim, true, false};
    Stratum top{"S", top_dim, true, true};  // smooth target: link classes are trivial
    ex.space.add_stratum(center, LevelData::from_hodge(center_closure));
    ex.space.add_stratum(top, LevelData::from_hodge(top_closure));
    ex.space.add_order("Z", "S");
    ex.space.add_link("Z", "S", LevelData::from_hodge(HodgeClass::one()));

    StratifiedMapData m;
    m.space = ex.space;
    m.fiber["S"] = LevelData::from_hodge(HodgeClass::one());
    m.fiber["Z"] = LevelData::from_hodge(exceptional_fiber);
    m.icone_preimage["Z"] = LevelData::from_hodge(exceptional_fiber);
    ex.map = std::move(m);
    return ex;
}

}  // namespace

StandardExample standard_space(const std::string& kind, const std::vector<std::string>& params) {
    if (kind == "pn") {
        int n = int_param(params, 0, kind);
        StandardExample ex;
        ex.space.name = "p" + std::to_string(n);
        Stratum s{"S", n, true, true};
        ex.space.add_stratum(s, LevelData::from_hodge(projective_diamond(n)));
        return ex;
    }
    if (kind == "blowup_p2_point")
        return smooth_blowup_model("blowup_p2_point", 0, 2, HodgeClass::one(), projective_diamond(2),
                                   projective_diamond(1));
    if (kind == "blowup_p3_line")
        return smooth_blowup_model("blowup_p3_line", 1, 3, projective_diamond(1), projective_diamond(3),
                                   projective_diamond(1));
    if (kind == "identity_p2") {
        StandardExample ex;
        ex.space.name = "identity_p2";
        Stratum p{"p", 0, true, false};
        Stratum s{"S", 2, true, true};
        ex.space.add_stratum(p, LevelData::from_hodge(HodgeClass::one()));
        ex.space.add_stratum(s, LevelData::from_hodge(projective_diamond(2)));
        ex.space.add_order("p", "S");
        ex.space.add_link("p", "S", LevelData::from_hodge(HodgeClass::one()));
        StratifiedMapData m;
        m.space = ex.space;
        m.fiber["S"] = LevelData::from_hodge(HodgeClass::one());
        m.fiber["p"] = LevelData::from_hodge(HodgeClass::one());
        m.icone_preimage["p"] = LevelData::from_hodge(HodgeClass::one());
        ex.map = std::move(m);
        return ex;
    }
    if (kind == "nodal_cubic") {
        // Normalization P^1; the node has two branches, so the link-cone
        // class is two weight-zero points.
        StandardExample ex;
        ex.space.name = "nodal_cubic";
        Stratum node{"node", 0, true, false};
        Stratum s{"S", 1, false, false};  // the smooth part is a torus, not simply connected
        ex.space.monodromy_ok = true;     // orbit stratification of a toric curve
        ex.space.add_stratum(node, LevelData::from_hodge(HodgeClass::one()));
        ex.space.add_stratum(s, LevelData::from_hodge(projective_diamond(1)));
        ex.space.add_order("node", "S");
        ex.space.add_link("node", "S", LevelData::from_hodge(HodgeClass::entry(0, 0, 2)));
        return ex;
    }
    throw data_error("unrecognized standard space kind '" + kind + "'");
}

}  // namespace genera
