// Elements of Q[y, y^-1, (1+y)^-1], kept as num/(1+y)^k in reduced form:
// either k = 0 or (1+y) does not divide num. This is the coefficient ring of
// the twisted Todd transformation and of all homology characteristic classes.
#pragma once

#include <string>

#include "genera/laurent.hpp"

namespace genera {

class LocalizedElem {
public:
    LocalizedElem() = default;
    LocalizedElem(LaurentPoly num) : num_(std::move(num)) {}
    LocalizedElem(const Rational& c) : num_(c) {}
    LocalizedElem(long long c) : num_(c) {}
    LocalizedElem(LaurentPoly num, unsigned k) : num_(std::move(num)), k_(k) { reduce(); }

    static LocalizedElem zero() { return {}; }
    static LocalizedElem one() { return LocalizedElem(LaurentPoly::one()); }
    // (1+y)^-k as a ring element.
    static LocalizedElem inv_one_plus_y(unsigned k) { return LocalizedElem(LaurentPoly::one(), k); }

    const LaurentPoly& num() const { return num_; }
    unsigned denom_pow() const { return k_; }
    bool is_zero() const { return num_.is_zero(); }
    // True when the element lies in Q[y,y^-1] (no surviving denominator).
    bool denominator_free() const { return k_ == 0; }

    LocalizedElem& operator+=(const LocalizedElem& o);
    LocalizedElem& operator-=(const LocalizedElem& o) { return *this += -o; }
    LocalizedElem& operator*=(const LocalizedElem& o);
    LocalizedElem operator-() const { return with_raw(-num_, k_); }

    friend LocalizedElem operator+(LocalizedElem a, const LocalizedElem& b) { return a += b; }
    friend LocalizedElem operator-(LocalizedElem a, const LocalizedElem& b) { return a -= b; }
    friend LocalizedElem operator*(LocalizedElem a, const LocalizedElem& b) { return a *= b; }
    friend bool operator==(const LocalizedElem& a, const LocalizedElem& b) {
        return a.k_ == b.k_ && a.num_ == b.num_;
    }
    friend bool operator!=(const LocalizedElem& a, const LocalizedElem& b) { return !(a == b); }

    // Substitution y = r, r != -1. Throws arithmetic_error at the pole.
    Rational eval(const Rational& r) const;

    std::string to_string() const;
    static LocalizedElem parse(const std::string& text);

private:
    static LocalizedElem with_raw(LaurentPoly num, unsigned k) {
        LocalizedElem e;
        e.num_ = std::move(num);
        e.k_ = k;
        e.reduce();
        return e;
    }
    void reduce();
    LaurentPoly num_;
    unsigned k_ = 0;
};

}  // namespace genera
