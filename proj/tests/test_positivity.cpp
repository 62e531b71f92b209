#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "trinomia/positivity.hpp"

using namespace trinomia;

namespace {

BiPoly B() { return BiPoly::var1(); }
BiPoly C() { return BiPoly::var2(); }
BiPoly ip(long v) { return BiPoly(v); }

std::vector<Rational> rationals(std::initializer_list<long> vs) {
    std::vector<Rational> out;
    for (long v : vs) out.emplace_back(v);
    return out;
}

std::vector<Rational> tu_row(unsigned long n) {
    std::vector<Rational> out;
    for (unsigned long k = 0; k <= n / 2; ++k) out.emplace_back(tnk_coeff(n, k));
    return out;
}

Mat<Integer> from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    Mat<Integer> m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m(i, j++) = Integer(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("coefficient triangle is totally positive at desk scale") {
    CHECK(is_tp(triangle_to_mat(tu_triangle(6)), 6).tp);

    // every minor of every order of the leading 8x8 block
    CHECK(is_tp(triangle_to_mat(tu_triangle(8)), 8).tp);
}

TEST_CASE("negative minors are reported with a lexicographic-first witness") {
    auto bad = from_rows({{1, 3}, {1, 2}});
    auto r = is_tp(bad, 2);
    CHECK_FALSE(r.tp);
    CHECK(r.witness.order == 2);
    CHECK(r.witness.rows == std::vector<std::size_t>{0, 1});
    CHECK(r.witness.cols == std::vector<std::size_t>{0, 1});
    CHECK(r.witness.value == Integer(-1));

    CHECK(is_tp(Mat<Integer>::identity(5), 5).tp);

    auto neg = from_rows({{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}});
    auto rn = is_tp(neg, 3);
    CHECK_FALSE(rn.tp);
    CHECK(rn.witness.order == 1);
    CHECK(rn.witness.rows == std::vector<std::size_t>{0});
    CHECK(rn.witness.cols == std::vector<std::size_t>{0});
    CHECK(rn.witness.value == Integer(-1));

    // witness does not depend on the worker count
    Mat<Integer> grid(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) grid(i, j) = Integer(long(i + j));
    auto serial = is_tp(grid, 4, 1);
    auto threaded = is_tp(grid, 4, 3);
    CHECK_FALSE(serial.tp);
    CHECK_FALSE(threaded.tp);
    CHECK(serial.witness.order == 2);
    CHECK(serial.witness.rows == threaded.witness.rows);
    CHECK(serial.witness.cols == threaded.witness.cols);
    CHECK(serial.witness.value == threaded.witness.value);
    CHECK(serial.witness.rows == std::vector<std::size_t>{0, 1});
    CHECK(serial.witness.cols == std::vector<std::size_t>{0, 1});
    CHECK(serial.witness.value == Integer(-1));
}

TEST_CASE("finite nonnegative sequences against the real-rootedness test") {
    CHECK(finite_pf_check(rationals({1, 2, 1})));
    CHECK_FALSE(finite_pf_check(rationals({1, 1, 1})));
    CHECK(finite_pf_check(rationals({1, 12, 6})));
    CHECK(finite_pf_check(rationals({5})));
    CHECK(finite_pf_check(rationals({1, 4, 0, 0})));  // trailing zeros stripped
    CHECK_THROWS_AS(finite_pf_check(rationals({1, -2, 1})), std::invalid_argument);

    for (unsigned long n = 0; n <= 40; ++n) CHECK(finite_pf_check(tu_row(n)));
}

TEST_CASE("log-convexity with first violating index") {
    auto good = tbc_prefix_gen(Rational(3), Rational(2), 10);
    auto g = log_convex_check(good);
    CHECK(g.ok);
    CHECK(g.first_bad == 10);

    auto bad = tbc_prefix_gen(Rational(1), Rational(1), 10);
    auto v = log_convex_check(bad);
    CHECK_FALSE(v.ok);
    CHECK(v.first_bad == 2);  // 1*7 < 3*3

    CHECK(log_convex_check(rationals({4, 4, 4, 4})).ok);
    CHECK_THROWS_AS(log_convex_check(rationals({1, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(log_convex_check(rationals({1, -1, 1})), std::invalid_argument);
}

TEST_CASE("tridiagonal leading minors by recurrence and by determinant") {
    auto boundary = j_leading_minors(Rational(2), Rational(1), 8);
    REQUIRE(boundary.size() == 9);
    for (auto& u : boundary) CHECK(u == 2);

    auto mixed = j_leading_minors(Rational(1), Rational(1), 4);
    CHECK(mixed[0] == 1);
    CHECK(mixed[1] == -1);

    auto strict = j_leading_minors(Rational(3), Rational(2), 3);
    CHECK(strict == rationals({3, 5, 9, 17}));

    auto u = j_leading_minors(B(), C(), 8);
    CHECK(u[0] == B());
    CHECK(u[1] == B() * B() - ip(2) * C());
    CHECK(u[2] == B() * B() * B() - ip(3) * B() * C());
    CHECK(u[3] == B() * B() * B() * B() - ip(4) * B() * B() * C() + ip(2) * C() * C());

    // independent determinant of the full 9x9 block equals u[8]
    CHECK(bareiss_det(j_matrix(B(), C(), 9)) == u[8]);
}

TEST_CASE("second-order positivity of the comparison matrix") {
    for (long b = 1; b <= 6; ++b)
        for (long c = 1; c <= 6; ++c) {
            bool expect = b * b >= 2 * c;
            CHECK(tp2_of_j(Rational(b), Rational(c), 10) == expect);
        }

    // the contiguous-minor shortcut agrees with exhaustive order-2 enumeration
    for (long b = 1; b <= 4; ++b)
        for (long c = 1; c <= 4; ++c) {
            auto j = j_matrix(Rational(b), Rational(c), 6);
            CHECK(tp2_of_j(Rational(b), Rational(c), 6) == is_tp(j, 2).tp);
        }
}

TEST_CASE("moment-sequence pattern verdicts") {
    auto central_binomial = tbc_prefix_gen(Rational(2), Rational(1), 18);
    CHECK(sm_check(central_binomial, 8) == SmVerdict::SM);

    auto ordinary = tbc_prefix_gen(Rational(1), Rational(1), 10);
    CHECK(sm_check(ordinary, 4) == SmVerdict::NotSM);

    std::vector<Rational> point_mass(10, Rational(0));
    point_mass[0] = 1;
    CHECK(sm_check(point_mass, 4) == SmVerdict::SM);

    std::vector<Rational> zero(10, Rational(0));
    CHECK(sm_check(zero, 4) == SmVerdict::SM);

    std::vector<Rational> constant(8, Rational(1));
    CHECK(sm_check(constant, 3) == SmVerdict::SM);

    // atom at the origin plus a point: minors vanish from depth 2 (plain)
    // and depth 1 (shifted)
    CHECK(sm_check(rationals({2, 1, 1, 1, 1, 1, 1, 1}), 3) == SmVerdict::SM);

    // vanishing minors that come back positive match no measure pattern
    // within the horizon
    CHECK(sm_check(rationals({1, 0, 0, 0, 0, 1, 0, 0, 0, 0}), 4) == SmVerdict::Inconclusive);

    CHECK_THROWS_AS(sm_check(std::vector<Rational>(7, Rational(1)), 3), std::invalid_argument);
}

TEST_CASE("sign criteria with cross-validation") {
    auto strict = tbc_criteria(Rational(3), Rational(2));
    CHECK(strict.log_convex);
    CHECK(strict.sm);

    auto boundary = tbc_criteria(Rational(2), Rational(1));
    CHECK(boundary.log_convex);
    CHECK(boundary.sm);

    auto neither = tbc_criteria(Rational(1), Rational(1));
    CHECK_FALSE(neither.log_convex);
    CHECK_FALSE(neither.sm);

    CHECK_THROWS_AS(tbc_criteria(Rational(0), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(tbc_criteria(Rational(1), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(tbc_criteria(Rational(-1), Rational(2)), std::invalid_argument);

    for (long b = 1; b <= 6; ++b)
        for (long c = 1; c <= 6; ++c) {
            auto v = tbc_criteria(Rational(b), Rational(c));
            CHECK(v.log_convex == (b * b >= 2 * c));
            CHECK(v.sm == (b * b >= 4 * c));

            auto seq = tbc_prefix_gen(Rational(b), Rational(c), 22);
            auto lc = log_convex_check({seq.begin(), seq.begin() + 12});
            CHECK(lc.ok == v.log_convex);
            auto sv = sm_check(seq, 10);
            CHECK(sv == (v.sm ? SmVerdict::SM : SmVerdict::NotSM));
        }

    // just inside the non-moment region the first negative shifted minor
    // sits beyond depth 10, so the pattern test alone cannot refute; the
    // criteria call must tolerate that one-sided gap
    Rational c_near = make_rational(101, 100);
    auto near = tbc_criteria(Rational(2), c_near);
    CHECK(near.log_convex);
    CHECK_FALSE(near.sm);
    CHECK(sm_check(tbc_prefix_gen(Rational(2), c_near, 22), 10) == SmVerdict::SM);
}
