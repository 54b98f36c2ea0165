#include "genera/hodge.hpp"

#include <sstream>

#include "genera/errors.hpp"

namespace genera {

HodgeClass HodgeClass::entry(int p, int q, const Integer& mult) {
    HodgeClass h;
    if (mult != 0) h.table_[{p, q}] = mult;
    return h;
}

Integer HodgeClass::mult(int p, int q) const {
    auto it = table_.find({p, q});
    return it == table_.end() ? Integer(0) : it->second;
}

void HodgeClass::set(const Key& k, Integer m) {
    if (m == 0)
        table_.erase(k);
    else
        table_[k] = std::move(m);
}

HodgeClass& HodgeClass::operator+=(const HodgeClass& o) {
    for (const auto& [k, m] : o.table_) set(k, mult(k.first, k.second) + m);
    return *this;
}

HodgeClass& HodgeClass::operator-=(const HodgeClass& o) {
    for (const auto& [k, m] : o.table_) set(k, mult(k.first, k.second) - m);
    return *this;
}

HodgeClass operator*(const HodgeClass& a, const HodgeClass& b) {
    HodgeClass r;
    for (const auto& [ka, ma] : a.table_)
        for (const auto& [kb, mb] : b.table_) {
            HodgeClass::Key k{ka.first + kb.first, ka.second + kb.second};
            r.set(k, r.mult(k.first, k.second) + ma * mb);
        }
    return r;
}

HodgeClass& HodgeClass::operator*=(const HodgeClass& o) { return *this = *this * o; }

HodgeClass HodgeClass::operator-() const {
    HodgeClass r;
    for (const auto& [k, m] : table_) r.table_[k] = -m;
    return r;
}

std::string HodgeClass::to_string() const {
    if (table_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, m] : table_) {
        if (!first) out << "; ";
        out << k.first << "," << k.second << ":" << m;
        first = false;
    }
    return out.str();
}

namespace {

int parse_int(const std::string& s, size_t& i) {
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw parse_error("expected integer in Hodge class at offset " + std::to_string(start));
    return std::stoi(s.substr(start, i - start));
}

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace

HodgeClass HodgeClass::parse(const std::string& text) {
    HodgeClass h;
    size_t i = 0;
    skip_ws(text, i);
    if (i >= text.size()) throw parse_error("empty Hodge class");
    if (text[i] == '0') {
        // allow the literal "0" for the zero class
        size_t j = i + 1;
        skip_ws(text, j);
        if (j >= text.size()) return h;
    }
    for (;;) {
        skip_ws(text, i);
        int p = parse_int(text, i);
        skip_ws(text, i);
        if (i >= text.size() || text[i] != ',') throw parse_error("expected ',' in Hodge class entry");
        ++i;
        skip_ws(text, i);
        int q = parse_int(text, i);
        skip_ws(text, i);
        if (i >= text.size() || text[i] != ':') throw parse_error("expected ':' in Hodge class entry");
        ++i;
        skip_ws(text, i);
        size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw parse_error("expected multiplicity in Hodge class entry");
        Integer m(text.substr(start, i - start));
        h += entry(p, q, m);
        skip_ws(text, i);
        if (i >= text.size()) break;
        if (text[i] != ';') throw parse_error("expected ';' between Hodge class entries");
        ++i;
    }
    return h;
}

BiLaurentPoly e_poly(const HodgeClass& h) {
    BiLaurentPoly e;
    for (const auto& [k, m] : h.table()) e += BiLaurentPoly::monomial(Rational(m), k.first, k.second);
    return e;
}

LaurentPoly chi_y_class(const HodgeClass& h) {
    LaurentPoly c;
    for (const auto& [k, m] : h.table())
        c += LaurentPoly::monomial(Rational(m) * parity_sign(k.first), k.first);
    return c;
}

}  // namespace genera
