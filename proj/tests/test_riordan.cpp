#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "trinomia/riordan.hpp"

using namespace trinomia;

namespace {

const BiPoly B = BiPoly::var1();
const BiPoly C = BiPoly::var2();

BiPoly ip(long k) { return BiPoly(k); }

TruncSeries<Rational> rational_series(std::vector<long> v, std::size_t order) {
    std::vector<Rational> c(order + 1, Rational(0));
    for (std::size_t k = 0; k < v.size() && k <= order; ++k) c[k] = Rational(v[k]);
    return TruncSeries<Rational>(std::move(c), order);
}

RiordanArray<Rational> coefficient_array(long b, long c, std::size_t depth) {
    RiordanArray<Rational> ra;
    ra.g = TruncSeries<Rational>(tbc_series_gen(Rational(b), Rational(c), depth), depth);
    ra.f = TruncSeries<Rational>(motzkin_series_gen(Rational(b), Rational(c), depth), depth);
    ra.depth = depth;
    return ra;
}

}  // namespace

TEST_CASE("constant series pair generates the identity matrix") {
    TruncSeries<Rational> one(6);
    one.at(0) = Rational(1);
    RiordanArray<Rational> ra{one, one, 6};
    Triangle<Rational> m = riordan_matrix(ra);
    for (std::size_t n = 0; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(m[n][k] == (n == k ? Rational(1) : Rational(0)));

    AZPair<Rational> az = extract_az(m);
    REQUIRE(az.a.size() == 1);
    REQUIRE(az.z.size() == 1);
    CHECK(az.a[0] == Rational(1));
    CHECK(az.z[0] == Rational(0));
}

TEST_CASE("coefficient array rows match the displayed polynomials and the factorial formula") {
    Triangle<BiPoly> m = riordan_matrix(tbc_riordan(8));

    std::vector<std::vector<BiPoly>> shown{
        {ip(1)},
        {B, ip(1)},
        {B * B + ip(2) * C, ip(2) * B, ip(1)},
        {B.pow(3) + ip(6) * B * C, ip(3) * B * B + ip(3) * C, ip(3) * B, ip(1)},
        {B.pow(4) + ip(12) * B * B * C + ip(6) * C * C, ip(4) * B.pow(3) + ip(12) * B * C,
         ip(6) * B * B + ip(4) * C, ip(4) * B, ip(1)},
    };
    for (std::size_t n = 0; n < shown.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k) CHECK(m[n][k] == shown[n][k]);

    // every entry against the independent factorial-sum route
    for (unsigned long n = 0; n <= 8; ++n)
        for (unsigned long k = 0; k <= n; ++k) CHECK(m[n][k] == laurent_entry(n, long(k)));
}

TEST_CASE("generalized Pascal array has entries binom(n,k) a^(n-k)") {
    Integer a = 3;
    Triangle<Integer> m = riordan_matrix(pascal_riordan(a, 7));
    for (std::size_t n = 0; n <= 7; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(m[n][k] == binomial(n, k) * pow_int(a, (unsigned long)(n - k)));

    AZPair<Integer> az = extract_az(m);
    REQUIRE(az.a.size() == 2);
    REQUIRE(az.z.size() == 1);
    CHECK(az.a[0] == 1);
    CHECK(az.a[1] == a);
    CHECK(az.z[0] == a);
}

TEST_CASE("row sums through the summation identity: closed forms") {
    // binomial rows sum to 2^n
    RiordanArray<Rational> pascal = pascal_riordan(Rational(1), 10);
    TruncSeries<Rational> ones(10);
    for (std::size_t k = 0; k <= 10; ++k) ones.at(k) = Rational(1);
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(ftra_sum(pascal, ones, n) == Rational(pow_int(2, n)));

    // nonnegative-power coefficients at b=c=1 sum to (3^n + T_n)/2:
    // the full trinomial row sums to 3^n and the negative side mirrors the
    // positive one.
    RiordanArray<Rational> tw = coefficient_array(1, 1, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
        Rational expect = make_rational(pow_int(3, n) + tbc_number(1, 1, n).get_num(), 2);
        CHECK(ftra_sum(tw, ones, n) == expect);
    }

    // picking out column 0 returns the column-0 numbers
    TruncSeries<Rational> delta0(10);
    delta0.at(0) = Rational(1);
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(ftra_sum(tw, delta0, n) == tbc_number(1, 1, n));
}

TEST_CASE("summation identity on randomized arrays and weight series") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> small(-9, 9);
    std::uniform_int_distribution<long> pos(1, 4);
    std::uniform_int_distribution<std::size_t> ord(0, 8);
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t depth = ord(rng);
        RiordanArray<Rational> ra = (iter % 2 == 0)
                                        ? coefficient_array(pos(rng), pos(rng), depth)
                                        : pascal_riordan(Rational(small(rng)), depth);
        TruncSeries<Rational> h(depth);
        for (std::size_t k = 0; k <= depth; ++k) h.at(k) = Rational(small(rng));
        std::size_t n = depth == 0 ? 0 : (ord(rng) % (depth + 1));

        Rational got = ftra_sum(ra, h, n);  // throws if the two routes disagree
        Triangle<Rational> m = riordan_matrix(ra);
        Rational dot(0);
        for (std::size_t k = 0; k <= n; ++k) dot += m[n][k] * h[k];
        CHECK(got == dot);
    }
}

TEST_CASE("recurrence coefficients recovered from the two working arrays") {
    AZPair<BiPoly> az = extract_az(riordan_matrix(tbc_riordan(9)));
    REQUIRE(az.a.size() == 3);
    REQUIRE(az.z.size() == 2);
    CHECK(az.a[0] == ip(1));
    CHECK(az.a[1] == B);
    CHECK(az.a[2] == C);
    CHECK(az.z[0] == B);
    CHECK(az.z[1] == ip(2) * C);

    AZPair<BiPoly> azm = extract_az(riordan_matrix(mbc_riordan(9)));
    REQUIRE(azm.a.size() == 3);
    REQUIRE(azm.z.size() == 2);
    CHECK(azm.a[0] == ip(1));
    CHECK(azm.a[1] == B);
    CHECK(azm.a[2] == C);
    CHECK(azm.z[0] == B);
    CHECK(azm.z[1] == C);
}

TEST_CASE("matrices without a column recurrence are rejected") {
    Triangle<Integer> pascal = riordan_matrix(pascal_riordan(Integer(1), 5));
    CHECK_NOTHROW(extract_az(pascal));

    Triangle<Integer> bent = pascal;
    bent[4][2] = 7;  // breaks r_{4,2} = r_{3,1} + r_{3,2}
    CHECK_THROWS_AS(extract_az(bent), std::domain_error);

    Triangle<Integer> scaled = pascal;
    scaled[3][3] = 2;  // diagonal must be all ones
    CHECK_THROWS_AS(extract_az(scaled), std::domain_error);
}

TEST_CASE("series pair rebuilt from its recurrence coefficients") {
    // a = (1, b, c), z = (b, 2c) must reproduce the coefficient-array pair
    AZPair<BiPoly> az;
    az.a = {ip(1), B, C};
    az.z = {B, ip(2) * C};
    RiordanArray<BiPoly> ra = gf_from_az(az, 12);
    TruncSeries<BiPoly> tt(tbc_series_symbolic(12), 12);
    TruncSeries<BiPoly> mx(motzkin_series_symbolic(12), 12);
    CHECK(ra.g.agrees_with(tt, 12));
    CHECK(ra.f.agrees_with(mx, 12));

    // z = (b, c) gives g = f = Motzkin series
    az.z = {B, C};
    RiordanArray<BiPoly> rm = gf_from_az(az, 12);
    CHECK(rm.g.agrees_with(mx, 12));
    CHECK(rm.f.agrees_with(mx, 12));

    // numeric binomial case round-trips through extraction
    AZPair<Rational> azp = extract_az(riordan_matrix(pascal_riordan(Rational(2), 8)));
    RiordanArray<Rational> back = gf_from_az(azp, 8);
    TruncSeries<Rational> geo(8);
    Rational p(1);
    for (std::size_t k = 0; k <= 8; ++k, p *= 2) geo.at(k) = p;
    CHECK(back.g.agrees_with(geo, 8));
    CHECK(back.f.agrees_with(geo, 8));

    AZPair<Rational> bad;
    bad.a = {Rational(2)};
    bad.z = {Rational(0)};
    CHECK_THROWS_AS(gf_from_az(bad, 4), std::domain_error);
}

TEST_CASE("column series satisfies its quadratic equation") {
    CHECK(motzkin_quadratic_residual(12).is_zero());
}

TEST_CASE("binomial shift identity") {
    CHECK(binomial_transform(Integer(2), Integer(1), Integer(1), 3) == 45);
    CHECK(binomial_transform(Integer(2), Integer(1), Integer(1), 3) ==
          tbc_number_gen(Integer(3), Integer(1), 3));

    std::mt19937 rng(23);
    std::uniform_int_distribution<long> v(-4, 4);
    for (int iter = 0; iter < 60; ++iter) {
        Integer b = v(rng), c = v(rng), a = v(rng);
        unsigned long n = (unsigned long)(iter % 12);
        CHECK_NOTHROW(binomial_transform(b, c, a, n));  // throws on mismatch
    }

    // fully symbolic: shifting by a fresh copy of the first variable
    CHECK_NOTHROW(binomial_transform(B, C, B, 9));
    CHECK(binomial_transform(B, C, B, 2) == ip(4) * B * B + ip(2) * C);
}
