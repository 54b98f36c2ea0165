// Virtual mixed Hodge structure classes recorded by their Hodge numbers: a
// finite bigrade table (p,q) -> multiplicity in Z, the shadow of a class in
// the Grothendieck ring of mixed Hodge structures. Weight is implicit, a
// bigrade (p,q) counts in weight p+q. Addition is the group law,
// multiplication is the tensor product (bigrade convolution).
//
// Text syntax: semicolon-separated entries "p,q:mult", e.g. "0,0:1; 1,1:1".
#pragma once

#include <map>
#include <string>
#include <utility>

#include "genera/laurent.hpp"
#include "genera/rational.hpp"

namespace genera {

class HodgeClass {
public:
    using Key = std::pair<int, int>;
    using Table = std::map<Key, Integer>;

    HodgeClass() = default;

    static HodgeClass zero() { return {}; }
    // The pure Hodge structure Q of weight zero, the ring unit.
    static HodgeClass one() { return entry(0, 0, 1); }
    static HodgeClass entry(int p, int q, const Integer& mult);

    bool is_zero() const { return table_.empty(); }
    const Table& table() const { return table_; }
    Integer mult(int p, int q) const;

    HodgeClass& operator+=(const HodgeClass& o);
    HodgeClass& operator-=(const HodgeClass& o);
    HodgeClass& operator*=(const HodgeClass& o);  // tensor product
    HodgeClass operator-() const;

    friend HodgeClass operator+(HodgeClass a, const HodgeClass& b) { return a += b; }
    friend HodgeClass operator-(HodgeClass a, const HodgeClass& b) { return a -= b; }
    friend HodgeClass operator*(const HodgeClass& a, const HodgeClass& b);
    friend bool operator==(const HodgeClass& a, const HodgeClass& b) { return a.table_ == b.table_; }
    friend bool operator!=(const HodgeClass& a, const HodgeClass& b) { return !(a == b); }

    std::string to_string() const;
    static HodgeClass parse(const std::string& text);

private:
    void set(const Key& k, Integer m);
    Table table_;
};

// E(V) = sum mult * u^p v^q, a ring homomorphism.
BiLaurentPoly e_poly(const HodgeClass& h);

// chi_y(V) = sum_p (sum_q mult) (-y)^p; equals specialize_uv(e_poly(h)).
LaurentPoly chi_y_class(const HodgeClass& h);

inline HodgeClass tensor(const HodgeClass& a, const HodgeClass& b) { return a * b; }

}  // namespace genera
