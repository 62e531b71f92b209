#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "trinomia/aigner.hpp"
#include "trinomia/bipoly.hpp"
#include "trinomia/errors.hpp"
#include "trinomia/matrix.hpp"
#include "trinomia/parallel.hpp"
#include "trinomia/positivity.hpp"
#include "trinomia/seqgen.hpp"
#include "trinomia/unipoly.hpp"

namespace trinomia {

inline BiPoly d_db(const BiPoly& p) {
    BiPoly r;
    for (auto& [e, coeff] : p.terms())
        if (e.first > 0) r += BiPoly::monomial(e.first - 1, e.second, coeff * e.first);
    return r;
}

inline BiPoly d_dc(const BiPoly& p) {
    BiPoly r;
    for (auto& [e, coeff] : p.terms())
        if (e.second > 0) r += BiPoly::monomial(e.first, e.second - 1, coeff * e.second);
    return r;
}

// Order-2 minor of the bi-infinite Hankel layout [T_{n+k}], exact.
inline BiPoly hankel_minor_poly(unsigned long i0, unsigned long i1, unsigned long j0,
                                unsigned long j1) {
    if (i1 <= i0 || j1 <= j0) throw std::invalid_argument("row and column indices must increase");
    std::vector<BiPoly> t = tbc_symbolic_prefix(i1 + j1 + 1);
    return t[i0 + j0] * t[i1 + j1] - t[i0 + j1] * t[i1 + j0];
}

struct PairMinorEntry {
    unsigned long i = 0, j = 0;
    Parity parity = Parity::Even;
    UVPoly f;
    bool ok = false;
    std::string note;  // empty when ok
};

struct PairMinorReport {
    bool pass = true;
    std::vector<PairMinorEntry> entries;
    std::string first_failure;
};

// Delta_ij = s_{i-1} s_{j+1} - s_i s_j over 1 <= i <= j, i+j <= max_sum,
// rewritten in the basis u = b^2 - m c, v = c. Each minor must land in the
// parity class of i+j (even sum: no loose b; odd sum: exactly one), carry
// nonnegative coefficients, and reconstruct exactly on back-substitution.
inline PairMinorReport pair_minor_family(const std::vector<BiPoly>& seq, unsigned m,
                                         unsigned long max_sum, unsigned jobs = 0) {
    if (max_sum < 2) throw std::invalid_argument("max_sum must be at least 2");
    if (seq.size() < max_sum + 1) throw std::invalid_argument("sequence too short");
    std::vector<std::pair<unsigned long, unsigned long>> pairs;
    for (unsigned long i = 1; i <= max_sum / 2; ++i)
        for (unsigned long j = i; i + j <= max_sum; ++j) pairs.emplace_back(i, j);

    std::function<PairMinorEntry(std::size_t)> run = [&](std::size_t which) {
        auto [i, j] = pairs[which];
        PairMinorEntry entry;
        entry.i = i;
        entry.j = j;
        entry.parity = ((i + j) % 2 == 0) ? Parity::Even : Parity::Odd;
        BiPoly delta = seq[i - 1] * seq[j + 1] - seq[i] * seq[j];
        if (delta.is_zero()) {
            entry.ok = true;
            return entry;
        }
        try {
            ParityForm pf = basis_change_uv(delta, m);
            if (pf.parity != entry.parity)
                entry.note = "parity class disagrees with the index sum";
            else if (!uvpoly_nonneg(pf.poly))
                entry.note = "negative coefficient in the factored minor";
            else if (!(parity_form_to_bipoly(pf, m) == delta))
                entry.note = "back-substitution does not reproduce the minor";
            else {
                entry.ok = true;
                entry.f = pf.poly;
            }
        } catch (const std::domain_error&) {
            entry.note = "minor is not parity-homogeneous";
        }
        return entry;
    };
    PairMinorReport rep;
    rep.entries = parallel_map<PairMinorEntry>(pairs.size(), jobs ? jobs : default_jobs(), run);
    for (const PairMinorEntry& e : rep.entries)
        if (!e.ok) {
            rep.pass = false;
            rep.first_failure = "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "): " + e.note;
            break;
        }
    return rep;
}

inline PairMinorReport verify_tli(unsigned long max_sum, unsigned jobs = 0) {
    return pair_minor_family(tbc_symbolic_prefix(max_sum + 1), 2, max_sum, jobs);
}

// Delta_n = s_n s_{n+2} - s_{n+1}^2 collected as lead * v^{n+1} * f(u/v);
// returns f after asserting it is monic of degree n with nonnegative
// integer coefficients. The weighted shape (every term u^p v^{n+1-p}) is
// forced by the weighting wt b = 1, wt c = 2 and is asserted, not assumed.
inline UniPoly consecutive_minor_extract(const std::vector<BiPoly>& seq, unsigned m,
                                         const Integer& lead, unsigned long n) {
    if (seq.size() < n + 3) throw std::invalid_argument("sequence too short");
    BiPoly delta = seq[n] * seq[n + 2] - seq[n + 1] * seq[n + 1];
    ParityForm pf = basis_change_uv(delta, m);
    if (pf.parity != Parity::Even) throw theorem_violation("consecutive minor has a loose factor");
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (auto& [e, coeff] : pf.poly.terms()) {
        unsigned long p = e.first;
        if (p > n || e.second != n + 1 - p)
            throw theorem_violation("consecutive minor misses the expected weighted shape");
        Rational a = make_rational(coeff, lead);
        if (a.get_den() != 1) throw theorem_violation("leading factor does not divide the minor");
        if (a < 0) throw theorem_violation("negative coefficient in the extracted polynomial");
        coeffs[p] = a;
    }
    if (coeffs[n] != 1) throw theorem_violation("extracted polynomial is not monic");
    return UniPoly(std::move(coeffs));
}

inline UniPoly extract_fn(unsigned long n) {
    return consecutive_minor_extract(tbc_symbolic_prefix(n + 3), 2, Integer(2), n);
}

struct AdmissibleEntry {
    std::array<unsigned long, 2> rows{}, cols{};
    bool even_sum = true;
    ParityForm form{};  // meaningful when ok and the minor is nonzero
    bool ok = true;
    std::string note;
};

struct AdmissibleReport {
    std::string name;
    bool pass = true;
    std::size_t minors_checked = 0;
    std::vector<AdmissibleEntry> entries;
    std::string first_failure;
};

// Exhaustive order-2 minor scan of the leading size x size block: index-sum
// parity must match the factored parity, coefficients must be nonnegative.
inline AdmissibleReport admissible_check(const Mat<BiPoly>& M, std::size_t size,
                                         const std::string& name, unsigned m = 2) {
    if (size > 10)
        throw std::invalid_argument("size capped at 10 for exhaustive order-2 enumeration");
    if (size > M.rows() || size > M.cols())
        throw std::invalid_argument("size exceeds the matrix");
    AdmissibleReport rep;
    rep.name = name;
    for (unsigned long i0 = 0; i0 + 1 < size; ++i0)
        for (unsigned long i1 = i0 + 1; i1 < size; ++i1)
            for (unsigned long j0 = 0; j0 + 1 < size; ++j0)
                for (unsigned long j1 = j0 + 1; j1 < size; ++j1) {
                    ++rep.minors_checked;
                    BiPoly d = M(i0, j0) * M(i1, j1) - M(i0, j1) * M(i1, j0);
                    if (d.is_zero()) continue;
                    AdmissibleEntry entry;
                    entry.rows = {i0, i1};
                    entry.cols = {j0, j1};
                    entry.even_sum = (i0 + i1 + j0 + j1) % 2 == 0;
                    Parity expected = entry.even_sum ? Parity::Even : Parity::Odd;
                    try {
                        ParityForm pf = basis_change_uv(d, m);
                        if (pf.parity != expected)
                            entry.note = "parity class disagrees with the index sum";
                        else if (!uvpoly_nonneg(pf.poly))
                            entry.note = "negative coefficient in the factored minor";
                        else if (!(parity_form_to_bipoly(pf, m) == d))
                            entry.note = "back-substitution does not reproduce the minor";
                        else
                            entry.form = pf;
                    } catch (const std::domain_error&) {
                        entry.note = "minor is not parity-homogeneous";
                    }
                    entry.ok = entry.note.empty();
                    if (!entry.ok && rep.pass) {
                        rep.pass = false;
                        rep.first_failure = entry.note;
                    }
                    rep.entries.push_back(std::move(entry));
                }
    return rep;
}

// Raw order-2 expansion: every 2x2 minor of A*B equals the sum over column
// pairs of products of matching minors of A and B.
template <class R>
bool cauchy_binet_check(const Mat<R>& A, const Mat<R>& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matrix shape mismatch");
    Mat<R> ab = A * B;
    for (std::size_t i0 = 0; i0 + 1 < ab.rows(); ++i0)
        for (std::size_t i1 = i0 + 1; i1 < ab.rows(); ++i1)
            for (std::size_t j0 = 0; j0 + 1 < ab.cols(); ++j0)
                for (std::size_t j1 = j0 + 1; j1 < ab.cols(); ++j1) {
                    R lhs = ab(i0, j0) * ab(i1, j1) - ab(i0, j1) * ab(i1, j0);
                    R rhs = RingTraits<R>::zero();
                    for (std::size_t k0 = 0; k0 + 1 < A.cols(); ++k0)
                        for (std::size_t k1 = k0 + 1; k1 < A.cols(); ++k1)
                            rhs += (A(i0, k0) * A(i1, k1) - A(i0, k1) * A(i1, k0)) *
                                   (B(k0, j0) * B(k1, j1) - B(k0, j1) * B(k1, j0));
                    if (!(lhs == rhs)) return false;
                }
    return true;
}

// (n+1) x (n+1) leading block of the coefficient triangle, symbolic.
inline Mat<BiPoly> tbc_leading(unsigned long n) {
    return triangle_to_mat(recursive_matrix(tbc_spec_symbolic(), n));
}

// diag(1) prepended as a first row and column.
inline Mat<BiPoly> unit_corner(const Mat<BiPoly>& m) {
    Mat<BiPoly> out(m.rows() + 1, m.cols() + 1);
    out(0, 0) = BiPoly(1L);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i + 1, j + 1) = m(i, j);
    return out;
}

// Unit first row stacked on the first size-1 rows of the comparison matrix.
inline Mat<BiPoly> lifted_step_matrix(std::size_t size) {
    if (size == 0) throw std::invalid_argument("size must be positive");
    Mat<BiPoly> j = j_matrix(BiPoly::var1(), BiPoly::var2(), size);
    Mat<BiPoly> out(size, size);
    out(0, 0) = BiPoly(1L);
    for (std::size_t i = 1; i < size; ++i)
        for (std::size_t k = 0; k < size; ++k) out(i, k) = j(i - 1, k);
    return out;
}

// The triangle's induction step: prepending a unit corner to the n-th
// leading block and multiplying by the lifted comparison matrix must
// reproduce the (n+1)-st leading block; the raw order-2 expansion holds on
// the product; and the product block stays parity-admissible.
inline bool lemma_step_check(unsigned long max_n) {
    for (unsigned long n = 0; n <= max_n; ++n) {
        Mat<BiPoly> lifted = unit_corner(tbc_leading(n));
        Mat<BiPoly> step = lifted_step_matrix(n + 2);
        Mat<BiPoly> product = lifted * step;
        if (!(product == tbc_leading(n + 1)))
            throw theorem_violation("triangle induction step mismatch");
        if (!cauchy_binet_check(lifted, step))
            throw theorem_violation("order-2 minor expansion mismatch");
        std::size_t cap = std::min<std::size_t>(n + 2, 8);
        if (!admissible_check(product, cap, "induction step product").pass)
            throw theorem_violation("induction step loses the parity factorization");
    }
    return true;
}

struct MotzkinSuiteReport {
    bool pass = true;
    unsigned long max_n = 0;
    bool c_derivative_ok = true;
    bool b_shift_ok = true;
    bool binomial_ok = true;
    std::vector<std::string> failures;
    PairMinorReport minors;         // companion pairwise minors
    std::vector<UniPoly> diagonal;  // companion consecutive-minor polynomials
};

// Five identities tying the companion sequence M_n to T_n: the c-derivative
// of c M_n gives T_n; b-derivatives shift the index down for both families;
// the binomial transform shifts b (proved at the integer points a = 0..n,
// enough for a degree-n polynomial identity); pairwise and consecutive
// minors factor in the basis u = b^2 - c, v = c with nonnegative
// coefficients, the consecutive ones monic of degree n.
inline MotzkinSuiteReport motzkin_suite(unsigned long max_n, unsigned jobs = 0) {
    if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
    MotzkinSuiteReport rep;
    rep.max_n = max_n;
    auto fail = [&](const std::string& msg) {
        rep.pass = false;
        rep.failures.push_back(msg);
    };

    std::vector<BiPoly> t = tbc_symbolic_prefix(max_n + 1);
    std::vector<BiPoly> mz(max_n + 1);
    for (unsigned long n = 0; n <= max_n; ++n) mz[n] = motzkin_symbolic(n);
    BiPoly c = BiPoly::var2();

    for (unsigned long n = 0; n <= max_n; ++n)
        if (!(d_dc(c * mz[n]) == t[n])) {
            rep.c_derivative_ok = false;
            fail("c-derivative identity fails at n = " + std::to_string(n));
        }

    if (!d_db(t[0]).is_zero() || !d_db(mz[0]).is_zero()) {
        rep.b_shift_ok = false;
        fail("b-derivative of a constant row is nonzero");
    }
    for (unsigned long n = 1; n <= max_n; ++n) {
        BiPoly scale(static_cast<long>(n));
        if (!(d_db(t[n]) == scale * t[n - 1]) || !(d_db(mz[n]) == scale * mz[n - 1])) {
            rep.b_shift_ok = false;
            fail("b-derivative shift fails at n = " + std::to_string(n));
        }
    }

    for (unsigned long n = 0; n <= max_n; ++n)
        for (long a = 0; a <= static_cast<long>(n); ++a) {
            BiPoly lhs;
            for (unsigned long k = 0; k <= n; ++k)
                lhs += mz[k] * BiPoly(binomial(n, k) * pow_int(Integer(a), n - k));
            BiPoly shifted = BiPoly::var1() + BiPoly(a);
            BiPoly rhs = motzkin_number_gen(shifted, c, n);
            if (!(lhs == rhs)) {
                rep.binomial_ok = false;
                fail("binomial shift fails at n = " + std::to_string(n) +
                     ", a = " + std::to_string(a));
                break;
            }
        }

    rep.minors = pair_minor_family(mz, 1, max_n, jobs);
    if (!rep.minors.pass) fail("pairwise minors: " + rep.minors.first_failure);

    for (unsigned long n = 0; n + 2 <= max_n; ++n) {
        try {
            rep.diagonal.push_back(consecutive_minor_extract(mz, 1, Integer(1), n));
        } catch (const theorem_violation& e) {
            fail("consecutive minor at n = " + std::to_string(n) + ": " + e.what());
        }
    }
    return rep;
}

inline UniPoly extract_gn(unsigned long n) {
    std::vector<BiPoly> mz(n + 3);
    for (unsigned long k = 0; k < mz.size(); ++k) mz[k] = motzkin_symbolic(k);
    return consecutive_minor_extract(mz, 1, Integer(1), n);
}

}  // namespace trinomia
