#pragma once

#include <string>
#include <vector>

#include "trinomia/errors.hpp"
#include "trinomia/seqgen.hpp"
#include "trinomia/series.hpp"

namespace trinomia {

// Proper array R(g, f): column k has generating function x^k f^k g.
template <class R>
struct RiordanArray {
    TruncSeries<R> g;
    TruncSeries<R> f;
    std::size_t depth = 0;
};

template <class R>
struct AZPair {
    std::vector<R> a;
    std::vector<R> z;
};

template <class R>
Triangle<R> riordan_matrix(const RiordanArray<R>& ra) {
    if (ra.depth > ra.g.order() || ra.depth > ra.f.order())
        throw std::invalid_argument("depth exceeds series order");
    Triangle<R> rows(ra.depth + 1);
    for (std::size_t n = 0; n <= ra.depth; ++n) rows[n].resize(n + 1, RingTraits<R>::zero());
    TruncSeries<R> col = ra.g.truncated(ra.depth);
    for (std::size_t k = 0; k <= ra.depth; ++k) {
        for (std::size_t n = k; n <= ra.depth; ++n) rows[n][k] = col[n - k];
        if (k < ra.depth) col = col * ra.f.truncated(ra.depth);
    }
    return rows;
}

// Both sides of the summation identity
//   sum_k r_{n,k} h_k = [x^n] g(x) h(x f(x)),
// computed independently; disagreement means broken arithmetic, not a bad
// input, so it throws theorem_violation. Returns the common value.
template <class R>
R ftra_sum(const RiordanArray<R>& ra, const TruncSeries<R>& h, std::size_t n) {
    if (n > ra.depth) throw std::invalid_argument("row index exceeds depth");
    if (h.order() < n) throw std::invalid_argument("h series order too small");
    Triangle<R> rows = riordan_matrix(ra);
    R lhs = RingTraits<R>::zero();
    for (std::size_t k = 0; k <= n; ++k) lhs += rows[n][k] * h[k];

    TruncSeries<R> xf = ra.f.truncated(n).shifted_up();
    TruncSeries<R> rhs_series = ra.g.truncated(n) * series_compose(h.truncated(n), xf);
    R rhs = rhs_series[n];
    if (!(lhs == rhs)) throw theorem_violation("row sum disagrees with series extraction");
    return lhs;
}

// Recovers the unique recurrence coefficient sequences of a proper array:
//   r_{n+1,k+1} = sum_j a_j r_{n,k+j},   r_{n+1,0} = sum_j z_j r_{n,j}.
// Unit diagonals make both systems triangular:
//   a_m = r_{m+1,1} - sum_{j<m} a_j r_{m,j},
//   z_m = r_{m+1,0} - sum_{j<m} z_j r_{m,j},
// and the full equation set is then re-verified so a matrix that is merely
// lower-triangular (not Riordan) is rejected.
template <class R>
AZPair<R> extract_az(const Triangle<R>& m) {
    using Traits = RingTraits<R>;
    if (m.size() < 2) throw std::invalid_argument("need at least two rows");
    std::size_t depth = m.size() - 1;
    for (std::size_t n = 0; n < m.size(); ++n) {
        if (m[n].size() != n + 1) throw std::invalid_argument("not lower-triangular");
        if (!(m[n][n] == Traits::one()))
            throw std::domain_error("not a proper Riordan array");
    }
    AZPair<R> az;
    az.a.resize(depth, Traits::zero());
    az.z.resize(depth, Traits::zero());
    for (std::size_t mm = 0; mm < depth; ++mm) {
        R a_acc = m[mm + 1][1];
        R z_acc = m[mm + 1][0];
        for (std::size_t j = 0; j < mm; ++j) {
            a_acc = a_acc - az.a[j] * m[mm][j];
            z_acc = z_acc - az.z[j] * m[mm][j];
        }
        az.a[mm] = a_acc;
        az.z[mm] = z_acc;
    }
    for (std::size_t n = 0; n + 1 <= depth; ++n) {
        for (std::size_t k = 0; k <= n + 1; ++k) {
            R acc = Traits::zero();
            if (k == 0) {
                for (std::size_t j = 0; j <= n && j < depth; ++j) acc += az.z[j] * m[n][j];
            } else {
                for (std::size_t j = 0; k - 1 + j <= n && j < depth; ++j)
                    acc += az.a[j] * m[n][k - 1 + j];
            }
            if (!(acc == m[n + 1][k])) throw std::domain_error("not a proper Riordan array");
        }
    }
    while (az.a.size() > 1 && Traits::is_zero(az.a.back())) az.a.pop_back();
    while (az.z.size() > 1 && Traits::is_zero(az.z.back())) az.z.pop_back();
    return az;
}

// Rebuilds (g, f) from the coefficient sequences:
//   f = A(x f)  (coefficient-wise fixed point, f_0 = 1),
//   g = 1 / (1 - x Z(x f)).
template <class R>
RiordanArray<R> gf_from_az(const AZPair<R>& az, std::size_t order) {
    using Traits = RingTraits<R>;
    if (az.a.empty() || !(az.a[0] == Traits::one()))
        throw std::domain_error("A-sequence must start with 1");
    TruncSeries<R> a_series(az.a, order);
    TruncSeries<R> z_series(az.z, order);
    TruncSeries<R> f(order);
    f.at(0) = Traits::one();
    for (std::size_t pass = 0; pass < order; ++pass) f = series_compose(a_series, f.shifted_up());
    TruncSeries<R> xf = f.shifted_up();
    TruncSeries<R> w = series_compose(z_series, xf).shifted_up();
    TruncSeries<R> denom(order);
    denom.at(0) = Traits::one();
    denom = denom - w;
    RiordanArray<R> ra;
    ra.g = series_inverse(denom);
    ra.f = f;
    ra.depth = order;
    return ra;
}

// Both sides of sum_k C(n,k) T_k(b,c) a^(n-k) = T_n(a+b,c), independently.
template <class R>
R binomial_transform(const R& b, const R& c, const R& a, unsigned long n) {
    using Traits = RingTraits<R>;
    std::vector<R> t = tbc_prefix_gen(b, c, n + 1);
    R lhs = Traits::zero();
    R apow = Traits::one();
    for (unsigned long k = n + 1; k-- > 0;) {
        lhs += R(binomial(n, k)) * t[k] * apow;
        apow = apow * a;
    }
    R shifted = a + b;
    R rhs = tbc_number_gen(shifted, c, n);
    if (!(lhs == rhs)) throw theorem_violation("binomial transform identity failed");
    return lhs;
}

// The two working arrays as series pairs: the coefficient array pairs the
// central-coefficient series with the Motzkin series, the Motzkin array
// uses the Motzkin series for both.
inline RiordanArray<BiPoly> tbc_riordan(std::size_t depth) {
    RiordanArray<BiPoly> ra;
    ra.g = TruncSeries<BiPoly>(tbc_series_symbolic(depth), depth);
    ra.f = TruncSeries<BiPoly>(motzkin_series_symbolic(depth), depth);
    ra.depth = depth;
    return ra;
}

inline RiordanArray<BiPoly> mbc_riordan(std::size_t depth) {
    RiordanArray<BiPoly> ra;
    ra.f = TruncSeries<BiPoly>(motzkin_series_symbolic(depth), depth);
    ra.g = ra.f;
    ra.depth = depth;
    return ra;
}

// Generalized Pascal array R(1/(1-ax), 1/(1-ax)).
template <class R>
RiordanArray<R> pascal_riordan(const R& a, std::size_t depth) {
    using Traits = RingTraits<R>;
    TruncSeries<R> geo(depth);
    R apow = Traits::one();
    for (std::size_t k = 0; k <= depth; ++k) {
        geo.at(k) = apow;
        apow = apow * a;
    }
    return RiordanArray<R>{geo, geo, depth};
}

// Residual of c x^2 f^2 - (1-bx) f + 1, which must vanish when f is the
// Motzkin series; exercised through the requested truncation order.
inline TruncSeries<BiPoly> motzkin_quadratic_residual(std::size_t order) {
    TruncSeries<BiPoly> f(motzkin_series_symbolic(order), order);
    TruncSeries<BiPoly> cx2f2 = (f * f).shifted_up().shifted_up();
    for (std::size_t k = 0; k <= order; ++k) cx2f2.at(k) *= BiPoly::var2();
    TruncSeries<BiPoly> one_minus_bx(order);
    one_minus_bx.at(0) = BiPoly(1L);
    if (order >= 1) one_minus_bx.at(1) = BiPoly::monomial(1, 0, -1);
    TruncSeries<BiPoly> one(order);
    one.at(0) = BiPoly(1L);
    return cx2f2 - one_minus_bx * f + one;
}

}  // namespace trinomia
