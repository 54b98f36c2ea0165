#include "genera/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "genera/errors.hpp"

namespace genera {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(const Rational& c, int e) {
    LaurentPoly p;
    if (c != 0) p.terms_[e] = c;
    return p;
}

Rational LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

void LaurentPoly::set(int e, Rational c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) - c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly pow(const LaurentPoly& p, unsigned n) {
    LaurentPoly r = LaurentPoly::one();
    for (unsigned i = 0; i < n; ++i) r *= p;
    return r;
}

Rational LaurentPoly::eval(const Rational& r) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e < 0 && r == 0) throw arithmetic_error("evaluation at y=0 with negative exponent");
        Rational p = 1;
        for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= r;
        if (e < 0) p = Rational(1) / p;
        acc += c * p;
    }
    return acc;
}

bool divide_by_one_plus_y(const LaurentPoly& p, LaurentPoly& q) {
    LaurentPoly rem = p, quot;
    while (!rem.is_zero()) {
        int hi = rem.max_exp();
        if (hi == rem.min_exp()) return false;  // single term left, (1+y) cannot divide
        Rational c = rem.coeff(hi);
        quot += LaurentPoly::monomial(c, hi - 1);
        rem -= LaurentPoly::monomial(c, hi) + LaurentPoly::monomial(c, hi - 1);
    }
    q = quot;
    return true;
}

// ---------------------------------------------------------------------------
// BiLaurentPoly

BiLaurentPoly BiLaurentPoly::monomial(const Rational& c, int i, int j) {
    BiLaurentPoly p;
    if (c != 0) p.terms_[{i, j}] = c;
    return p;
}

Rational BiLaurentPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiLaurentPoly::set(const Key& k, Rational c) {
    if (c == 0)
        terms_.erase(k);
    else
        terms_[k] = std::move(c);
}

BiLaurentPoly& BiLaurentPoly::operator+=(const BiLaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) set(k, coeff(k.first, k.second) + c);
    return *this;
}

BiLaurentPoly& BiLaurentPoly::operator-=(const BiLaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) set(k, coeff(k.first, k.second) - c);
    return *this;
}

BiLaurentPoly operator*(const BiLaurentPoly& a, const BiLaurentPoly& b) {
    BiLaurentPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            BiLaurentPoly::Key k{ka.first + kb.first, ka.second + kb.second};
            r.set(k, r.coeff(k.first, k.second) + ca * cb);
        }
    return r;
}

BiLaurentPoly& BiLaurentPoly::operator*=(const BiLaurentPoly& o) { return *this = *this * o; }

BiLaurentPoly BiLaurentPoly::operator-() const {
    BiLaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

BiLaurentPoly pow(const BiLaurentPoly& p, unsigned n) {
    BiLaurentPoly r = BiLaurentPoly::one();
    for (unsigned i = 0; i < n; ++i) r *= p;
    return r;
}

LaurentPoly specialize_uv(const BiLaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [k, c] : p.terms()) {
        // u^i v^j -> (-y)^i
        r += LaurentPoly::monomial(parity_sign(k.first) * c, k.first);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void append_term(std::ostringstream& out, bool first, const Rational& c, const std::string& vars) {
    Rational m = c < 0 ? Rational(-c) : c;
    if (first) {
        if (c < 0) out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    if (vars.empty()) {
        out << m;
    } else if (m == 1) {
        out << vars;
    } else {
        out << m << "*" << vars;
    }
}

std::string var_power(char v, int e) {
    if (e == 0) return {};
    std::ostringstream s;
    s << v;
    if (e != 1) s << "^" << e;
    return s.str();
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_term(out, first, it->second, var_power('y', it->first));
        first = false;
    }
    return out.str();
}

std::string BiLaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    // Descending total degree, then descending u-exponent.
    std::vector<std::pair<Key, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first.first > b.first.first;
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : ts) {
        std::string vu = var_power('u', k.first), vv = var_power('v', k.second);
        std::string vars = vu.empty() ? vv : (vv.empty() ? vu : vu + "*" + vv);
        append_term(out, first, c, vars);
        first = false;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Parsing. One tokenizer serves both variants; the caller restricts the
// variable set.

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip_ws();
        return s[i++];
    }
    Integer number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw parse_error("expected number in polynomial at offset " + std::to_string(i));
        return Integer(s.substr(start, i - start));
    }
};

struct RawTerm {
    Rational coef = 1;
    std::map<char, int> exps;
};

int parse_exponent(Lexer& lx) {
    bool neg = false;
    if (lx.peek() == '-') {
        lx.get();
        neg = true;
    } else if (lx.peek() == '+') {
        lx.get();
    }
    Integer n = lx.number();
    if (n > 1000000) throw parse_error("exponent out of range");
    int e = static_cast<int>(n.convert_to<long long>());
    return neg ? -e : e;
}

std::vector<RawTerm> parse_terms(const std::string& text, const std::string& allowed) {
    Lexer lx{text};
    std::vector<RawTerm> out;
    if (lx.eof()) throw parse_error("empty polynomial");
    while (!lx.eof()) {
        RawTerm t;
        // Sign prefix.
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            if (c == '-') t.coef = -1;
        } else if (!out.empty()) {
            throw parse_error("expected '+' or '-' between terms");
        }
        // Factors separated by optional '*'.
        bool any = false;
        for (;;) {
            c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Integer num = lx.number();
                Rational f(num);
                if (lx.peek() == '/') {
                    lx.get();
                    Integer den = lx.number();
                    if (den == 0) throw parse_error("zero denominator");
                    f = Rational(num, den);
                }
                t.coef *= f;
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                lx.get();
                if (allowed.find(c) == std::string::npos)
                    throw parse_error(std::string("unexpected variable '") + c + "'");
                int e = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    e = parse_exponent(lx);
                }
                t.exps[c] += e;
                any = true;
            } else {
                break;
            }
            if (lx.peek() == '*') lx.get();
        }
        if (!any) throw parse_error("empty term in polynomial");
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly p;
    for (const auto& t : parse_terms(text, "y")) {
        int e = 0;
        if (auto it = t.exps.find('y'); it != t.exps.end()) e = it->second;
        p += monomial(t.coef, e);
    }
    return p;
}

BiLaurentPoly BiLaurentPoly::parse(const std::string& text) {
    BiLaurentPoly p;
    for (const auto& t : parse_terms(text, "uv")) {
        int i = 0, j = 0;
        if (auto it = t.exps.find('u'); it != t.exps.end()) i = it->second;
        if (auto it = t.exps.find('v'); it != t.exps.end()) j = it->second;
        p += monomial(t.coef, i, j);
    }
    return p;
}

}  // namespace genera
