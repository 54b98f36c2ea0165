// Combinatorial ground truth: fans of toric varieties and the standard
// worked examples. An orbit of a cone of dimension k is a torus of dimension
// d-k, so the compactly supported E-polynomial of the orbit decomposition is
// the cone-count generating function evaluated at uv-1. Only cone counts per
// dimension carry semantics; ray data documents which variety a fan builder
// produced.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genera/genus.hpp"
#include "genera/laurent.hpp"

namespace genera {

struct Cone {
    std::string id;
    int dim = 0;
    std::vector<std::vector<long long>> rays;  // optional documentation
};

struct Fan {
    int dim = 0;
    std::vector<Cone> cones;

    std::vector<std::string> validate() const;
    void ensure_valid() const;
    // Number of cones per dimension 0..dim.
    std::vector<size_t> cone_counts() const;
};

// Sum over cones of (uv-1)^(d - dim sigma): E_c of the orbit decomposition.
BiLaurentPoly ec_from_fan(const Fan& f);

Fan projective_space_fan(int n);
Fan hirzebruch_surface_fan(long long a);
Fan product_fan(const Fan& a, const Fan& b);

// Built-in worked examples, fully populated with closure, link and fiber
// data. Recognized kinds: pn (param n), blowup_p2_point, blowup_p3_line,
// nodal_cubic, identity_p2.
struct StandardExample {
    StratifiedSpace space;
    std::optional<StratifiedMapData> map;
};

StandardExample standard_space(const std::string& kind, const std::vector<std::string>& params = {});

// Hodge class of P^n: one (p,p) entry per 0 <= p <= n.
HodgeClass projective_diamond(int n);

}  // namespace genera
