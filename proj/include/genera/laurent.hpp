// Sparse exact Laurent polynomials: LaurentPoly in y over Q, BiLaurentPoly
// in (u,v) over Q. Term maps never store zero coefficients, so equality of
// the maps is equality in the ring and printing is canonical.
//
// Text syntax (parse accepts any term order and arbitrary whitespace):
//   1 - 2*y + y^2      3/2*y^-1      u^2*v^2 + u*v + 1
// Canonical output is descending exponent order; for (u,v) descending total
// degree, then descending u-exponent.
#pragma once

#include <map>
#include <string>
#include <utility>

#include "genera/rational.hpp"

namespace genera {

class LaurentPoly {
public:
    using TermMap = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c) { if (c != 0) terms_[0] = c; }
    LaurentPoly(long long c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly monomial(const Rational& c, int e);
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return LaurentPoly(1); }
    static LaurentPoly y() { return monomial(1, 1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return *this == one(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(int e) const;
    Rational constant_term() const { return coeff(0); }
    int min_exp() const;  // requires non-zero
    int max_exp() const;  // requires non-zero

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    LaurentPoly& scale(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Substitution y = r. Throws arithmetic_error on r = 0 with negative
    // exponents present.
    Rational eval(const Rational& r) const;

    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

private:
    void set(int e, Rational c);
    TermMap terms_;
    friend class BiLaurentPoly;
};

LaurentPoly pow(const LaurentPoly& p, unsigned n);

// Quotient by (1+y), if exact: sets q with p = (1+y)*q and returns true.
bool divide_by_one_plus_y(const LaurentPoly& p, LaurentPoly& q);

class BiLaurentPoly {
public:
    using Key = std::pair<int, int>;  // (u-exponent, v-exponent)
    using TermMap = std::map<Key, Rational>;

    BiLaurentPoly() = default;
    BiLaurentPoly(const Rational& c) { if (c != 0) terms_[{0, 0}] = c; }
    BiLaurentPoly(long long c) : BiLaurentPoly(Rational(c)) {}

    static BiLaurentPoly monomial(const Rational& c, int i, int j);
    static BiLaurentPoly zero() { return {}; }
    static BiLaurentPoly one() { return BiLaurentPoly(1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(int i, int j) const;

    BiLaurentPoly& operator+=(const BiLaurentPoly& o);
    BiLaurentPoly& operator-=(const BiLaurentPoly& o);
    BiLaurentPoly& operator*=(const BiLaurentPoly& o);
    BiLaurentPoly operator-() const;

    friend BiLaurentPoly operator+(BiLaurentPoly a, const BiLaurentPoly& b) { return a += b; }
    friend BiLaurentPoly operator-(BiLaurentPoly a, const BiLaurentPoly& b) { return a -= b; }
    friend BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b);
    friend bool operator==(const BiLaurentPoly& a, const BiLaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiLaurentPoly& a, const BiLaurentPoly& b) { return !(a == b); }

    std::string to_string() const;
    static BiLaurentPoly parse(const std::string& text);

private:
    void set(const Key& k, Rational c);
    TermMap terms_;
};

BiLaurentPoly pow(const BiLaurentPoly& p, unsigned n);

// The ring homomorphism u -> -y, v -> 1.
LaurentPoly specialize_uv(const BiLaurentPoly& p);

}  // namespace genera
