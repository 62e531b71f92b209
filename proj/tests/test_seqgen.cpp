#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trinomia/seqgen.hpp"

using namespace trinomia;

TEST_CASE("triangle entries match the small display rows") {
    CHECK(tnk_coeff(4, 1) == 12);
    CHECK(tnk_coeff(5, 2) == 30);
    CHECK(tnk_coeff(0, 0) == 1);
    CHECK(tnk_coeff(3, 2) == 0);  // 2k > n

    Triangle<Integer> tu = tu_triangle(6);
    std::vector<std::vector<long>> expect{
        {1}, {1, 0}, {1, 2, 0}, {1, 6, 0, 0}, {1, 12, 6, 0, 0}, {1, 20, 30, 0, 0, 0}};
    REQUIRE(tu.size() == 6);
    for (std::size_t n = 0; n < 6; ++n) {
        REQUIRE(tu[n].size() == n + 1);
        for (std::size_t k = 0; k <= n; ++k) CHECK(tu[n][k] == expect[n][k]);
    }
}

TEST_CASE("row polynomials: degree, positivity, displayed row, recurrence") {
    CHECK(row_poly(4) == UniPoly::from_integers({1, 12, 6}));
    CHECK(row_poly(2) == UniPoly::from_integers({1, 2}));
    // (n+1) G_{n+1} = (2n+1) G_n + n (4x - 1) G_{n-1}
    UniPoly four_x_minus_1 = UniPoly::from_integers({-1, 4});
    for (unsigned long n = 1; n <= 30; ++n) {
        UniPoly lhs = row_poly(n + 1).scaled(Rational(long(n + 1)));
        UniPoly rhs = row_poly(n).scaled(Rational(long(2 * n + 1))) +
                      (four_x_minus_1 * row_poly(n - 1)).scaled(Rational(long(n)));
        CHECK(lhs == rhs);
    }
    for (unsigned long n = 0; n <= 40; ++n) {
        UniPoly g = row_poly(n);
        CHECK(g.degree() == int(n / 2));
        for (auto& c : g.coeffs()) CHECK(c > 0);
        CHECK(g.eval(1) == tbc_number(1, 1, n));
    }
    CHECK(row_poly(7).eval(1) == 393);
}

TEST_CASE("recurrence route: numeric examples") {
    CHECK(tbc_number(1, 1, 5) == 51);
    CHECK(tbc_number(2, 1, 4) == 70);  // C(8,4)
    CHECK(tbc_number(3, 2, 3) == 63);
    CHECK(tbc_number(1, 1, 0) == 1);
    CHECK(tbc_number(Rational(1, 2), Rational(1, 3), 2) ==
          Rational(1, 4) + Rational(2, 3));
}

TEST_CASE("recurrence route: symbolic examples") {
    CHECK(tbc_symbolic(0) == BiPoly(1L));
    CHECK(tbc_symbolic(1) == BiPoly::var1());
    CHECK(tbc_symbolic(2) == BiPoly::monomial(2, 0, 1) + BiPoly::monomial(0, 1, 2));
    CHECK(tbc_symbolic(3) == BiPoly::monomial(3, 0, 1) + BiPoly::monomial(1, 1, 6));
    CHECK(tbc_symbolic(4) == BiPoly::monomial(4, 0, 1) + BiPoly::monomial(2, 1, 12) +
                                 BiPoly::monomial(0, 2, 6));
}

TEST_CASE("closed-sum route agrees with displayed values") {
    CHECK(tbc_number_direct(3, 2, 3) == 63);
    CHECK(tbc_number_direct(1, 1, 4) == 19);
    CHECK(tbc_symbolic_direct(1) == BiPoly::var1());
}

TEST_CASE("expansion oracle small cases") {
    CHECK(trinomial_expand_oracle(1, 1, 2) == 3);
    CHECK(trinomial_expand_oracle(3, 2, 2) == 13);
    CHECK(trinomial_expand_oracle(5, 7, 0) == 1);
    CHECK(trinomial_expand_symbolic(0) == BiPoly(1L));
}

TEST_CASE("four routes agree symbolically") {
    auto series = tbc_series_symbolic(12);
    for (unsigned long n = 0; n <= 12; ++n) {
        BiPoly a = tbc_symbolic(n);
        CHECK(a == tbc_symbolic_direct(n));
        CHECK(a == trinomial_expand_symbolic(n));
        CHECK(a == series[n]);
    }
}

TEST_CASE("four routes agree numerically on a parameter sample") {
    for (long b = 1; b <= 4; ++b) {
        for (long c = 1; c <= 4; ++c) {
            auto series = tbc_series_gen(Rational(b), Rational(c), 20);
            auto prefix = tbc_prefix_gen(Rational(b), Rational(c), 21);
            for (unsigned long n = 0; n <= 20; ++n) {
                Rational v = prefix[n];
                CHECK(v == tbc_number_direct(b, c, n));
                CHECK(v == trinomial_expand_oracle(b, c, n));
                CHECK(v == series[n]);
            }
        }
    }
}

TEST_CASE("laurent triangle entries") {
    CHECK(laurent_entry(3, 1) == BiPoly::monomial(2, 0, 3) + BiPoly::monomial(0, 1, 3));
    CHECK(laurent_entry(6, 6) == BiPoly(1L));
    CHECK(laurent_entry(2, -1) == BiPoly::monomial(1, 1, 2));  // 2bc
    CHECK(laurent_entry(4, 5).is_zero());
    CHECK(laurent_entry(4, -5).is_zero());
    // negative index symmetry T_{n,-k} = c^k T_{n,k}
    for (unsigned long n = 0; n <= 8; ++n)
        for (long k = 1; k <= long(n); ++k)
            CHECK(laurent_entry(n, -k) ==
                  laurent_entry(n, k) * BiPoly::monomial(0, std::uint32_t(k), 1));
}

TEST_CASE("laurent entries match the full convolution expansion") {
    for (unsigned long n = 0; n <= 6; ++n) {
        auto full = laurent_expand_oracle(n);
        REQUIRE(full.size() == 2 * n + 1);
        for (long k = -long(n); k <= long(n); ++k)
            CHECK(laurent_entry(n, k) == full[std::size_t(k + long(n))]);
    }
}

TEST_CASE("laurent center column is the coefficient sequence") {
    for (unsigned long n = 0; n <= 30; ++n) CHECK(laurent_entry(n, 0) == tbc_symbolic(n));
}

TEST_CASE("motzkin companion numbers") {
    std::vector<long> m11{1, 1, 2, 4, 9, 21};
    for (unsigned long n = 0; n <= 5; ++n) CHECK(motzkin_number(1, 1, n) == m11[n]);
    CHECK(motzkin_symbolic(1) == BiPoly::var1());
    CHECK(motzkin_symbolic(2) == BiPoly::monomial(2, 0, 1) + BiPoly::monomial(0, 1, 1));
}

TEST_CASE("motzkin series route agrees with the closed sum") {
    auto sym = motzkin_series_symbolic(10);
    for (unsigned long n = 0; n <= 10; ++n) CHECK(sym[n] == motzkin_symbolic(n));
    auto num = motzkin_series_gen(Rational(3), Rational(2), 12);
    for (unsigned long n = 0; n <= 12; ++n) CHECK(num[n] == motzkin_number(3, 2, n));
}

TEST_CASE("central prefix recurrence matches the generic route") {
    auto central = central_prefix(40);
    auto generic = tbc_prefix_gen(Rational(1), Rational(1), 40);
    for (unsigned long n = 0; n < 40; ++n) CHECK(Rational(central[n]) == generic[n]);
    CHECK(central[7] == 393);
}
