// Truncated formal power series in a nilpotent variable with LaurentPoly
// coefficients, and the normalized Hirzebruch series
//
//   Q_y(a) = a(1+y)/(1 - e^{-a(1+y)}) - a*y  =  sum_m c_m(y) a^m.
//
// With b_m the coefficients of x/(1-e^{-x}) (Bernoulli-type, b_0 = 1,
// b_1 = 1/2, b_m = B_m/m! for m >= 2), one has c_0 = 1,
// c_1 = (1-y)/2 and c_m = b_m (1+y)^m for m >= 2.
#pragma once

#include <vector>

#include "genera/laurent.hpp"

namespace genera {

struct PowerSeries {
    unsigned order = 0;                // truncation; coeffs has order+1 entries
    std::vector<LaurentPoly> coeffs;   // coefficient of a^m at index m

    const LaurentPoly& coeff(unsigned m) const { return coeffs.at(m); }
    // Substitutes a concrete y-value into every coefficient.
    std::vector<Rational> eval_y(const Rational& r) const;
};

// Bernoulli numbers B_0..B_n, B_1 = -1/2 convention.
std::vector<Rational> bernoulli_numbers(unsigned n);

// Coefficients b_0..b_n of x/(1 - e^{-x}).
std::vector<Rational> todd_series_coefficients(unsigned n);

// First N+1 coefficients of Q_y(a), exact.
PowerSeries qy_series(unsigned n);

}  // namespace genera
