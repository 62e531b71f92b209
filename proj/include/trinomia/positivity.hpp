#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "trinomia/aigner.hpp"
#include "trinomia/errors.hpp"
#include "trinomia/matrix.hpp"
#include "trinomia/parallel.hpp"
#include "trinomia/realroots.hpp"
#include "trinomia/seqgen.hpp"

namespace trinomia {

// Witness for a failed total-positivity check: the first negative minor in
// (order, row set, column set) lexicographic order.
template <class R>
struct MinorReport {
    std::size_t order = 0;
    std::vector<std::size_t> rows, cols;
    R value{};
};

template <class R>
struct TpResult {
    bool tp = true;
    MinorReport<R> witness;  // populated only when tp is false
};

// Exhaustive minor enumeration, orders 1..max_order ascending. Within one
// order the row subsets fan out across jobs, but the reported witness is
// always the lexicographically first negative minor: candidates are reduced
// in row-subset order, so the verdict never depends on scheduling.
template <class R>
TpResult<R> is_tp(const Mat<R>& m, std::size_t max_order, unsigned jobs = 1) {
    using Traits = RingTraits<R>;
    std::size_t cap = std::min({max_order, m.rows(), m.cols()});
    if (jobs == 0) jobs = default_jobs();
    for (std::size_t r = 1; r <= cap; ++r) {
        std::vector<std::vector<std::size_t>> rsets;
        for_each_subset(m.rows(), r, [&](const std::vector<std::size_t>& ri) {
            rsets.push_back(ri);
            return true;
        });
        std::function<std::optional<MinorReport<R>>(std::size_t)> scan =
            [&](std::size_t which) -> std::optional<MinorReport<R>> {
            std::optional<MinorReport<R>> found;
            for_each_subset(m.cols(), r, [&](const std::vector<std::size_t>& ci) {
                R d = bareiss_det(m.submatrix(rsets[which], ci));
                if (d < Traits::zero()) {
                    found = MinorReport<R>{r, rsets[which], ci, d};
                    return false;
                }
                return true;
            });
            return found;
        };
        auto hits = parallel_map<std::optional<MinorReport<R>>>(rsets.size(), jobs, scan);
        for (auto& h : hits)
            if (h) return TpResult<R>{false, *h};
    }
    return TpResult<R>{};
}

// Nonnegative finite sequences are Polya frequency sequences exactly when
// their generating polynomial is real-rooted.
inline bool finite_pf_check(const std::vector<Rational>& seq) {
    std::vector<Rational> c = seq;
    for (auto& v : c)
        if (v < 0) throw std::invalid_argument("entries must be nonnegative");
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) return true;
    return is_real_rooted(UniPoly(std::move(c)));
}

struct LogConvexResult {
    bool ok = false;
    std::size_t first_bad = 0;  // smallest n with a_{n-1} a_{n+1} < a_n^2; len when ok
};

inline LogConvexResult log_convex_check(const std::vector<Rational>& a) {
    for (auto& v : a)
        if (!(v > 0)) throw std::invalid_argument("entries must be positive");
    for (std::size_t n = 1; n + 1 < a.size(); ++n)
        if (a[n - 1] * a[n + 1] < a[n] * a[n]) return {false, n};
    return {true, a.size()};
}

// The tridiagonal comparison matrix: diagonal b, superdiagonal 1,
// subdiagonal (2c, c, c, ...).
template <class R>
Mat<R> j_matrix(const R& b, const R& c, std::size_t n) {
    using Traits = RingTraits<R>;
    Mat<R> j(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, i) = b;
        if (i + 1 < n) {
            j(i, i + 1) = Traits::one();
            j(i + 1, i) = i == 0 ? c + c : c;
        }
    }
    return j;
}

// Leading principal minors u_0..u_N of the tridiagonal matrix, by the
// recurrence u_n = b u_{n-1} - c u_{n-2} seeded with u_0 = b, u_1 = b^2-2c.
// The first few are re-derived from literal determinants as a guard.
template <class R>
std::vector<R> j_leading_minors(const R& b, const R& c, std::size_t N) {
    std::vector<R> u(N + 1);
    u[0] = b;
    if (N >= 1) u[1] = b * b - (c + c);
    for (std::size_t n = 2; n <= N; ++n) u[n] = b * u[n - 1] - c * u[n - 2];

    std::size_t guard = std::min<std::size_t>(N, 8);
    Mat<R> j = j_matrix(b, c, guard + 1);
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n <= guard; ++n) {
        idx.push_back(n);
        if (!(bareiss_det(j.submatrix(idx, idx)) == u[n]))
            throw theorem_violation("tridiagonal minor recurrence mismatch");
    }
    return u;
}

// Entries plus contiguous 2x2 minors of the leading block. For a
// tridiagonal matrix with nonnegative entries, any 2x2 minor whose row and
// column pairs are not the same adjacent pair has a vanishing off-diagonal
// product, so these decide second-order total positivity.
template <class R>
bool tp2_of_j(const R& b, const R& c, std::size_t size) {
    using Traits = RingTraits<R>;
    Mat<R> j = j_matrix(b, c, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t k = 0; k < size; ++k)
            if (j(i, k) < Traits::zero()) return false;
    for (std::size_t i = 0; i + 1 < size; ++i)
        for (std::size_t k = 0; k + 1 < size; ++k) {
            R d = j(i, k) * j(i + 1, k + 1) - j(i, k + 1) * j(i + 1, k);
            if (d < Traits::zero()) return false;
        }
    return true;
}

enum class SmVerdict { SM, NotSM, Inconclusive };

// Hankel-minor pattern test for being a moment sequence of a nonnegative
// measure on the half line, bounded by depth: a strictly negative minor
// refutes; strictly positive minors, optionally ending in a zero tail that
// starts at the same index in both families or one step earlier in the
// shifted family, match; anything else is undecided at this depth.
template <class R>
SmVerdict sm_check(const std::vector<R>& seq, std::size_t depth) {
    using Traits = RingTraits<R>;
    if (seq.size() < 2 * depth + 2) throw std::invalid_argument("sequence too short");
    std::vector<bool> hpos(depth + 1), spos(depth + 1);
    for (std::size_t n = 0; n <= depth; ++n) {
        R h = hankel_det(seq, n);
        R s = shifted_hankel_det(seq, n);
        if (h < Traits::zero() || s < Traits::zero()) return SmVerdict::NotSM;
        hpos[n] = !Traits::is_zero(h);
        spos[n] = !Traits::is_zero(s);
    }
    auto cutoff = [&](const std::vector<bool>& pos) -> std::size_t {
        std::size_t cut = depth + 1;
        for (std::size_t n = 0; n <= depth; ++n)
            if (!pos[n]) {
                cut = n;
                break;
            }
        for (std::size_t n = cut; n <= depth && n < pos.size(); ++n)
            if (pos[n]) return std::size_t(-1);  // zero followed by positive
        return cut;
    };
    std::size_t hcut = cutoff(hpos), scut = cutoff(spos);
    if (hcut == std::size_t(-1) || scut == std::size_t(-1)) return SmVerdict::Inconclusive;
    if (hcut == depth + 1 && scut == depth + 1) return SmVerdict::SM;
    if (scut == hcut || scut + 1 == hcut) return SmVerdict::SM;
    return SmVerdict::Inconclusive;
}

struct CriteriaVerdict {
    bool log_convex = false;
    bool sm = false;
};

// Sign tests b^2 >= 2c (log-convexity) and b^2 >= 4c (moment sequence),
// cross-validated on the generated sequence. Log-convexity is decided both
// ways by the prefix (a violation always shows at n = 2). The moment check
// can only be falsified in one direction at finite depth: a pattern match
// below the horizon never contradicts b^2 < 4c, since the first negative
// shifted minor may sit beyond it.
inline CriteriaVerdict tbc_criteria(const Rational& b, const Rational& c) {
    if (!(b > 0) || !(c > 0)) throw std::invalid_argument("b and c must be positive");
    bool lc_sign = b * b >= 2 * c;
    bool sm_sign = b * b >= 4 * c;

    std::vector<Rational> seq = tbc_prefix_gen(b, c, 22);
    LogConvexResult lc = log_convex_check(std::vector<Rational>(seq.begin(), seq.begin() + 12));
    if (lc.ok != lc_sign)
        throw theorem_violation("log-convexity verdict disagrees with the sign test");

    SmVerdict sv = sm_check(seq, 10);
    if (sm_sign && sv != SmVerdict::SM)
        throw theorem_violation("moment verdict disagrees with the sign test");
    return {lc_sign, sm_sign};
}

}  // namespace trinomia
