#pragma once

#include <vector>

#include "trinomia/errors.hpp"
#include "trinomia/matrix.hpp"
#include "trinomia/seqgen.hpp"

namespace trinomia {

// Weight sequences for the triangle recurrence
//   r_{n+1,k} = r_{n,k-1} + b_k r_{n,k} + c_{k+1} r_{n,k+1},
// stored as eventually-constant (prefix + repeated tail). b is indexed from
// 0, c from 1, matching how the recurrence consumes them.
template <class R>
struct RecursiveSpec {
    std::vector<R> b_prefix;
    R b_tail;
    std::vector<R> c_prefix;
    R c_tail;

    const R& b_at(std::size_t k) const {
        return k < b_prefix.size() ? b_prefix[k] : b_tail;
    }
    const R& c_at(std::size_t k) const {
        if (k == 0) throw std::invalid_argument("c is indexed from 1");
        return k - 1 < c_prefix.size() ? c_prefix[k - 1] : c_tail;
    }
};

// b = (b, b, ...), c = (2c, c, c, ...): the coefficient triangle spec.
template <class R>
RecursiveSpec<R> tbc_spec(const R& b, const R& c) {
    R two_c = c + c;
    return RecursiveSpec<R>{{}, b, {two_c}, c};
}

// b = (b, b, ...), c = (c, c, ...): the Motzkin triangle spec.
template <class R>
RecursiveSpec<R> mbc_spec(const R& b, const R& c) {
    return RecursiveSpec<R>{{}, b, {}, c};
}

inline RecursiveSpec<BiPoly> tbc_spec_symbolic() {
    return tbc_spec(BiPoly::var1(), BiPoly::var2());
}
inline RecursiveSpec<BiPoly> mbc_spec_symbolic() {
    return mbc_spec(BiPoly::var1(), BiPoly::var2());
}

template <class R>
Triangle<R> recursive_matrix(const RecursiveSpec<R>& spec, std::size_t depth) {
    using Traits = RingTraits<R>;
    Triangle<R> rows(depth + 1);
    rows[0] = {Traits::one()};
    for (std::size_t n = 0; n + 1 <= depth; ++n) {
        rows[n + 1].assign(n + 2, Traits::zero());
        for (std::size_t k = 0; k <= n + 1; ++k) {
            R acc = Traits::zero();
            if (k >= 1) acc += rows[n][k - 1];
            if (k <= n) acc += spec.b_at(k) * rows[n][k];
            if (k + 1 <= n) acc += spec.c_at(k + 1) * rows[n][k + 1];
            rows[n + 1][k] = acc;
        }
    }
    return rows;
}

// delta_0 = 1, delta_k = c_1 c_2 ... c_k.
template <class R>
std::vector<R> delta_weights(const RecursiveSpec<R>& spec, std::size_t count) {
    using Traits = RingTraits<R>;
    std::vector<R> d(count + 1);
    d[0] = Traits::one();
    for (std::size_t k = 1; k <= count; ++k) d[k] = d[k - 1] * spec.c_at(k);
    return d;
}

template <class R>
R catalan_like(const RecursiveSpec<R>& spec, std::size_t n) {
    return recursive_matrix(spec, n)[n][0];
}

// Both forms of the orthogonality identity, computed independently:
//   sum_k r_{m,k} r_{n,k} delta_k = r_{m+n,0}
// and, on the (max(m,n)+1)-truncation, H = R D R^t where H is the Hankel
// matrix of the column-0 numbers. Returns the common value r_{m+n,0}.
template <class R>
R verify_fundamental(const RecursiveSpec<R>& spec, std::size_t m, std::size_t n) {
    using Traits = RingTraits<R>;
    Triangle<R> rows = recursive_matrix(spec, m + n);
    std::size_t kmax = std::min(m, n);
    std::vector<R> delta = delta_weights(spec, kmax);
    R lhs = Traits::zero();
    for (std::size_t k = 0; k <= kmax; ++k) lhs += rows[m][k] * rows[n][k] * delta[k];
    R rhs = rows[m + n][0];
    if (!(lhs == rhs)) throw theorem_violation("fundamental identity sum mismatch");

    std::size_t t = std::max(m, n);
    Triangle<R> deep = recursive_matrix(spec, 2 * t);
    Mat<R> rmat(t + 1, t + 1), dmat(t + 1, t + 1), hmat(t + 1, t + 1);
    std::vector<R> dk = delta_weights(spec, t);
    for (std::size_t i = 0; i <= t; ++i) {
        dmat(i, i) = dk[i];
        for (std::size_t j = 0; j <= t; ++j) {
            if (j <= i) rmat(i, j) = deep[i][j];
            hmat(i, j) = deep[i + j][0];
        }
    }
    if (!(hmat - rmat * dmat * rmat.transpose()).is_zero())
        throw theorem_violation("Hankel decomposition mismatch");
    return rhs;
}

// det [seq_{i+j}] for 0 <= i,j <= n, fraction-free.
template <class R>
R hankel_det(const std::vector<R>& seq, std::size_t n) {
    if (seq.size() < 2 * n + 1) throw std::invalid_argument("sequence too short");
    Mat<R> h(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) h(i, j) = seq[i + j];
    return bareiss_det(h);
}

// det [seq_{i+j+1}] for 0 <= i,j <= n.
template <class R>
R shifted_hankel_det(const std::vector<R>& seq, std::size_t n) {
    if (seq.size() < 2 * n + 2) throw std::invalid_argument("sequence too short");
    Mat<R> h(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) h(i, j) = seq[i + j + 1];
    return bareiss_det(h);
}

template <class R>
std::vector<R> hankel_transform(const std::vector<R>& seq, std::size_t upto) {
    std::vector<R> y(upto + 1);
    for (std::size_t n = 0; n <= upto; ++n) y[n] = hankel_det(seq, n);
    return y;
}

template <class R>
std::vector<R> binomial_transform_seq(const std::vector<R>& seq, std::size_t upto) {
    using Traits = RingTraits<R>;
    if (seq.size() < upto + 1) throw std::invalid_argument("sequence too short");
    std::vector<R> z(upto + 1);
    for (std::size_t n = 0; n <= upto; ++n) {
        R acc = Traits::zero();
        for (std::size_t k = 0; k <= n; ++k) acc += R(binomial(n, k)) * seq[k];
        z[n] = acc;
    }
    return z;
}

}  // namespace trinomia
