#include "genera/localized.hpp"

#include <sstream>

#include "genera/errors.hpp"

namespace genera {

void LocalizedElem::reduce() {
    if (num_.is_zero()) {
        k_ = 0;
        return;
    }
    LaurentPoly q;
    while (k_ > 0 && divide_by_one_plus_y(num_, q)) {
        num_ = q;
        --k_;
    }
}

LocalizedElem& LocalizedElem::operator+=(const LocalizedElem& o) {
    unsigned k = std::max(k_, o.k_);
    LaurentPoly lift_a = num_ * pow(LaurentPoly::one() + LaurentPoly::y(), k - k_);
    LaurentPoly lift_b = o.num_ * pow(LaurentPoly::one() + LaurentPoly::y(), k - o.k_);
    num_ = lift_a + lift_b;
    k_ = k;
    reduce();
    return *this;
}

LocalizedElem& LocalizedElem::operator*=(const LocalizedElem& o) {
    num_ *= o.num_;
    k_ += o.k_;
    reduce();
    return *this;
}

Rational LocalizedElem::eval(const Rational& r) const {
    if (r == -1 && k_ > 0) throw arithmetic_error("evaluation at the pole y=-1");
    Rational v = num_.eval(r);
    for (unsigned i = 0; i < k_; ++i) v /= (1 + r);
    return v;
}

std::string LocalizedElem::to_string() const {
    if (k_ == 0) return num_.to_string();
    std::ostringstream out;
    out << "(" << num_.to_string() << ")/(1+y)^" << k_;
    return out.str();
}

LocalizedElem LocalizedElem::parse(const std::string& text) {
    auto slash = text.find('/');
    // Heuristic: a denominator marker is "/(", never part of a rational
    // coefficient a/b.
    while (slash != std::string::npos) {
        auto next = text.find_first_not_of(" \t", slash + 1);
        if (next != std::string::npos && text[next] == '(') break;
        slash = text.find('/', slash + 1);
    }
    if (slash == std::string::npos) return LocalizedElem(LaurentPoly::parse(text));

    std::string head = text.substr(0, slash);
    std::string tail = text.substr(slash + 1);
    // head must be a parenthesized numerator.
    auto l = head.find('(');
    auto r = head.rfind(')');
    if (l == std::string::npos || r == std::string::npos || r < l)
        throw parse_error("expected (numerator)/(1+y)^k");
    LaurentPoly num = LaurentPoly::parse(head.substr(l + 1, r - l - 1));

    // tail: (1+y) or (1+y)^k
    auto tl = tail.find('(');
    auto tr = tail.find(')');
    if (tl == std::string::npos || tr == std::string::npos || tr < tl)
        throw parse_error("expected (1+y)^k denominator");
    LaurentPoly base = LaurentPoly::parse(tail.substr(tl + 1, tr - tl - 1));
    if (base != LaurentPoly::one() + LaurentPoly::y())
        throw parse_error("denominator base must be (1+y)");
    unsigned k = 1;
    auto caret = tail.find('^', tr);
    if (caret != std::string::npos) {
        k = static_cast<unsigned>(std::stoul(tail.substr(caret + 1)));
    }
    return LocalizedElem(std::move(num), k);
}

}  // namespace genera
