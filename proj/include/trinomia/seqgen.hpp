#pragma once

#include <vector>

#include "trinomia/bipoly.hpp"
#include "trinomia/integer.hpp"
#include "trinomia/matrix.hpp"
#include "trinomia/series.hpp"
#include "trinomia/unipoly.hpp"

namespace trinomia {

// Lower-triangular triangle: rows[n] has n+1 entries.
template <class R>
using Triangle = std::vector<std::vector<R>>;

template <class R>
Mat<R> triangle_to_mat(const Triangle<R>& t) {
    Mat<R> m(t.size(), t.size());
    for (std::size_t n = 0; n < t.size(); ++n)
        for (std::size_t k = 0; k < t[n].size(); ++k) m(n, k) = t[n][k];
    return m;
}

// n! / (k! k! (n-2k)!) = C(n,2k) C(2k,k); zero outside 0 <= 2k <= n.
inline Integer tnk_coeff(unsigned long n, unsigned long k) {
    if (2 * k > n) return Integer(0);
    return binomial(n, 2 * k) * binomial(2 * k, k);
}

inline Triangle<Integer> tu_triangle(unsigned long rows) {
    Triangle<Integer> t(rows);
    for (unsigned long n = 0; n < rows; ++n) {
        t[n].resize(n + 1);
        for (unsigned long k = 0; k <= n; ++k) t[n][k] = tnk_coeff(n, k);
    }
    return t;
}

// Row generating polynomial of the central-coefficient triangle; degree
// floor(n/2), all coefficients positive.
inline UniPoly row_poly(unsigned long n) {
    std::vector<Integer> c(n / 2 + 1);
    for (unsigned long k = 0; k <= n / 2; ++k) c[k] = tnk_coeff(n, k);
    return UniPoly::from_integers(c);
}

// Three-term recurrence route:
//   (n+1) T_{n+1} = (2n+1) b T_n - n (b^2 - 4c) T_{n-1},  T_0 = 1, T_1 = b.
// The division by n+1 must cancel exactly; in polynomial rings a non-exact
// division throws, which would mean the recurrence was transcribed wrong.
template <class R>
std::vector<R> tbc_prefix_gen(const R& b, const R& c, unsigned long count) {
    using Traits = RingTraits<R>;
    std::vector<R> t;
    t.reserve(count);
    if (count == 0) return t;
    t.push_back(Traits::one());
    if (count == 1) return t;
    t.push_back(b);
    R disc = b * b - Traits::from_long(4) * c;
    for (unsigned long n = 1; n + 1 < count; ++n) {
        R num = Traits::from_long(long(2 * n + 1)) * b * t[n] -
                Traits::from_long(long(n)) * disc * t[n - 1];
        t.push_back(Traits::div_long(num, long(n + 1)));
    }
    return t;
}

template <class R>
R tbc_number_gen(const R& b, const R& c, unsigned long n) {
    return tbc_prefix_gen(b, c, n + 1).back();
}

inline Rational tbc_number(const Rational& b, const Rational& c, unsigned long n) {
    return tbc_number_gen(b, c, n);
}
inline BiPoly tbc_symbolic(unsigned long n) {
    return tbc_number_gen(BiPoly::var1(), BiPoly::var2(), n);
}
inline std::vector<BiPoly> tbc_symbolic_prefix(unsigned long count) {
    return tbc_prefix_gen(BiPoly::var1(), BiPoly::var2(), count);
}

// Closed-sum route: T_n(b,c) = sum_k T(n,k) b^(n-2k) c^k.
template <class R>
R tbc_number_direct_gen(const R& b, const R& c, unsigned long n) {
    using Traits = RingTraits<R>;
    std::vector<R> bpow(n + 1), cpow(n / 2 + 1);
    bpow[0] = Traits::one();
    for (unsigned long i = 1; i <= n; ++i) bpow[i] = bpow[i - 1] * b;
    cpow[0] = Traits::one();
    for (unsigned long j = 1; j <= n / 2; ++j) cpow[j] = cpow[j - 1] * c;
    R acc = Traits::zero();
    for (unsigned long k = 0; k <= n / 2; ++k) {
        R term = bpow[n - 2 * k] * cpow[k];
        acc += term * R(tnk_coeff(n, k));
    }
    return acc;
}

inline Rational tbc_number_direct(const Rational& b, const Rational& c, unsigned long n) {
    return tbc_number_direct_gen(b, c, n);
}
inline BiPoly tbc_symbolic_direct(unsigned long n) {
    return tbc_number_direct_gen(BiPoly::var1(), BiPoly::var2(), n);
}

// Brute-force route: the x^n coefficient of (x^2 + bx + c)^n by repeated
// convolution. Degrees above n never feed back down, so products are
// truncated at degree n.
template <class R>
R trinomial_expand_oracle_gen(const R& b, const R& c, unsigned long n) {
    using Traits = RingTraits<R>;
    std::vector<R> acc{Traits::one()};
    const R one = Traits::one();
    for (unsigned long step = 0; step < n; ++step) {
        std::size_t out_len = std::min<std::size_t>(acc.size() + 2, n + 1);
        std::vector<R> next(out_len, Traits::zero());
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (RingTraits<R>::is_zero(acc[i])) continue;
            if (i < out_len) next[i] += acc[i] * c;
            if (i + 1 < out_len) next[i + 1] += acc[i] * b;
            if (i + 2 < out_len) next[i + 2] += acc[i] * one;
        }
        acc = std::move(next);
    }
    return acc.size() > n ? acc[n] : Traits::zero();
}

inline Rational trinomial_expand_oracle(const Rational& b, const Rational& c, unsigned long n) {
    return trinomial_expand_oracle_gen(b, c, n);
}
inline BiPoly trinomial_expand_symbolic(unsigned long n) {
    return trinomial_expand_oracle_gen(BiPoly::var1(), BiPoly::var2(), n);
}

// Generating-series route: coefficients of (1 - 2bx + (b^2-4c)x^2)^(-1/2).
template <class R>
std::vector<R> tbc_series_gen(const R& b, const R& c, unsigned long order) {
    using Traits = RingTraits<R>;
    TruncSeries<R> p(order);
    p.at(0) = Traits::one();
    if (order >= 1) p.at(1) = Traits::zero() - Traits::from_long(2) * b;
    if (order >= 2) p.at(2) = b * b - Traits::from_long(4) * c;
    return series_inv_sqrt(p).coeffs();
}

inline std::vector<BiPoly> tbc_series_symbolic(unsigned long order) {
    return tbc_series_gen(BiPoly::var1(), BiPoly::var2(), order);
}

// Laurent triangle entry: the x^k coefficient of (x + b + c/x)^n,
//   T_{n,k} = sum_j n!/(j! (j+k)! (n-k-2j)!) b^(n-k-2j) c^j  for k >= 0,
// and T_{n,-k} = c^k T_{n,k}. Zero for |k| > n by convention: it keeps the
// triangle recurrences free of boundary special cases.
inline BiPoly laurent_entry(unsigned long n, long k) {
    unsigned long ka = k < 0 ? unsigned(-k) : unsigned(k);
    if (ka > n) return BiPoly();
    BiPoly acc;
    Integer nf = factorial(n);
    for (unsigned long j = 0; 2 * j + ka <= n; ++j) {
        Integer denom = factorial(j) * factorial(j + ka) * factorial(n - ka - 2 * j);
        Integer coeff = div_exact(nf, denom);
        acc.add_term(std::uint32_t(n - ka - 2 * j), std::uint32_t(j), coeff);
    }
    if (k < 0) acc *= BiPoly::monomial(0, std::uint32_t(ka), 1);
    return acc;
}

// Full Laurent expansion of (x + b + c/x)^n: result[i] is the coefficient of
// x^(i-n), for i in [0, 2n]. Independent convolution oracle for laurent_entry.
inline std::vector<BiPoly> laurent_expand_oracle(unsigned long n) {
    std::vector<BiPoly> acc{BiPoly(1L)};
    for (unsigned long step = 0; step < n; ++step) {
        std::vector<BiPoly> next(acc.size() + 2);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i] += acc[i] * BiPoly::var2();
            next[i + 1] += acc[i] * BiPoly::var1();
            next[i + 2] += acc[i];
        }
        acc = std::move(next);
    }
    return acc;
}

// Motzkin companion numbers: M_n(b,c) = sum_k C(n,2k) Cat(k) b^(n-2k) c^k.
template <class R>
R motzkin_number_gen(const R& b, const R& c, unsigned long n) {
    using Traits = RingTraits<R>;
    std::vector<R> bpow(n + 1), cpow(n / 2 + 1);
    bpow[0] = Traits::one();
    for (unsigned long i = 1; i <= n; ++i) bpow[i] = bpow[i - 1] * b;
    cpow[0] = Traits::one();
    for (unsigned long j = 1; j <= n / 2; ++j) cpow[j] = cpow[j - 1] * c;
    R acc = Traits::zero();
    for (unsigned long k = 0; k <= n / 2; ++k)
        acc += bpow[n - 2 * k] * cpow[k] * R(binomial(n, 2 * k) * catalan(k));
    return acc;
}

inline Rational motzkin_number(const Rational& b, const Rational& c, unsigned long n) {
    return motzkin_number_gen(b, c, n);
}
inline BiPoly motzkin_symbolic(unsigned long n) {
    return motzkin_number_gen(BiPoly::var1(), BiPoly::var2(), n);
}

// Series route for the Motzkin numbers:
//   (1 - bx - sqrt(1 - 2bx + (b^2-4c)x^2)) / (2cx^2).
// The numerator starts at x^2 and every coefficient is divisible by 2c.
template <class R>
std::vector<R> motzkin_series_gen(const R& b, const R& c, unsigned long order) {
    using Traits = RingTraits<R>;
    TruncSeries<R> p(order + 2);
    p.at(0) = Traits::one();
    p.at(1) = Traits::zero() - Traits::from_long(2) * b;
    p.at(2) = b * b - Traits::from_long(4) * c;
    TruncSeries<R> root = series_sqrt(p);
    R two_c = Traits::from_long(2) * c;
    std::vector<R> m(order + 1);
    for (unsigned long k = 0; k <= order; ++k)
        m[k] = Traits::div(Traits::zero() - root[k + 2], two_c);
    return m;
}

inline std::vector<BiPoly> motzkin_series_symbolic(unsigned long order) {
    return motzkin_series_gen(BiPoly::var1(), BiPoly::var2(), order);
}

// Central (b=c=1) coefficients by the integer recurrence
//   n T_n = (2n-1) T_{n-1} + 3 (n-1) T_{n-2}.
inline std::vector<Integer> central_prefix(unsigned long count) {
    std::vector<Integer> t;
    t.reserve(count);
    if (count == 0) return t;
    t.push_back(1);
    if (count == 1) return t;
    t.push_back(1);
    for (unsigned long n = 2; n < count; ++n) {
        Integer num = Integer(2 * n - 1) * t[n - 1] + Integer(3) * Integer(n - 1) * t[n - 2];
        t.push_back(div_exact(num, Integer(n)));
    }
    return t;
}

}  // namespace trinomia
