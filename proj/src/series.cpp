#include "genera/series.hpp"

namespace genera {

std::vector<Rational> PowerSeries::eval_y(const Rational& r) const {
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.eval(r));
    return out;
}

std::vector<Rational> bernoulli_numbers(unsigned n) {
    // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        Rational s = 0;
        for (unsigned k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * b[k];
        b[m] = -s / Rational(m + 1);
    }
    return b;
}

std::vector<Rational> todd_series_coefficients(unsigned n) {
    // x/(1-e^{-x}) = x + x/(e^x - 1), so b_0 = 1, b_1 = B_1 + 1 = 1/2,
    // b_m = B_m/m! above.
    std::vector<Rational> bern = bernoulli_numbers(n);
    std::vector<Rational> b(n + 1);
    for (unsigned m = 0; m <= n; ++m) b[m] = bern[m] / Rational(factorial(m));
    if (n >= 1) b[1] += 1;
    return b;
}

PowerSeries qy_series(unsigned n) {
    std::vector<Rational> b = todd_series_coefficients(n);
    LaurentPoly opy = LaurentPoly::one() + LaurentPoly::y();
    PowerSeries s;
    s.order = n;
    s.coeffs.resize(n + 1);
    LaurentPoly opy_pow = LaurentPoly::one();
    for (unsigned m = 0; m <= n; ++m) {
        LaurentPoly c = opy_pow;
        c.scale(b[m]);
        s.coeffs[m] = c;
        opy_pow *= opy;
    }
    if (n >= 1) s.coeffs[1] -= LaurentPoly::y();
    return s;
}

}  // namespace genera
