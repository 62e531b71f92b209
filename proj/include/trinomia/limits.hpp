#pragma once

#include <vector>

#include "trinomia/integer.hpp"

namespace trinomia {

// Row-distribution moments, exact: mu = G'(1)/G(1) and
// sigma2 = G''(1)/G(1) + mu - mu^2 for the row polynomial of index n.
struct MomentStats {
    unsigned long n = 0;
    Rational mu;
    Rational sigma2;
};

// Derivative sums are taken directly over the row; the mean is re-derived
// from the closed form n(T_n - T_{n-1})/(2 T_n) and must agree.
MomentStats moment_stats(unsigned long n);

// G''(1) + G'(1) = n(n-1) T_{n-2}, exactly; mismatch throws.
bool identity_2plus1(unsigned long n);

// |T_{n-1}/T_n - 1/3|, exact.
Rational ratio_gap(unsigned long n);

// x-values -4, -31/8, ..., 31/8, 4.
std::vector<Rational> gaussian_grid();

// Largest gap over the grid between sigma_n p(n, floor(mu + x sigma)) and
// the standard normal density at x. Probabilities p(n,k) = T(n,k)/T_n stay
// rational until the final comparison.
double llt_gap(unsigned long n, const std::vector<Rational>& grid);

// Same protocol for the distribution function: total mass of
// {k <= mu + x sigma} against the standard normal CDF.
double clt_gap(unsigned long n, const std::vector<Rational>& grid);

}  // namespace trinomia
