#include "trinomia/limits.hpp"

#include <cmath>
#include <stdexcept>

#include "trinomia/errors.hpp"
#include "trinomia/seqgen.hpp"

namespace trinomia {

namespace {

// T(n,0..floor(n/2)) by the neighbor ratio
// T(n,k+1) = T(n,k) (n-2k)(n-2k-1) / (k+1)^2; both divisions are exact.
std::vector<Integer> row_values(unsigned long n) {
    std::vector<Integer> row(n / 2 + 1);
    row[0] = 1;
    for (unsigned long k = 0; k + 1 < row.size(); ++k) {
        Integer num = row[k] * Integer(n - 2 * k) * Integer(n - 2 * k - 1);
        row[k + 1] = div_exact(num, Integer(k + 1) * Integer(k + 1));
    }
    return row;
}

struct RowSums {
    Integer g1;    // G(1)
    Integer gp1;   // G'(1)
    Integer gpp1;  // G''(1)
};

RowSums row_sums(const std::vector<Integer>& row) {
    RowSums s;
    for (unsigned long k = 0; k < row.size(); ++k) {
        s.g1 += row[k];
        if (k >= 1) s.gp1 += Integer(k) * row[k];
        if (k >= 2) s.gpp1 += Integer(k) * Integer(k - 1) * row[k];
    }
    return s;
}

void check_grid(const std::vector<Rational>& grid) {
    for (const Rational& x : grid)
        if (x < -4 || x > 4) throw std::invalid_argument("grid value outside [-4, 4]");
}

double normal_density(double x) { return std::exp(-x * x / 2.0) / std::sqrt(2.0 * M_PI); }
double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

MomentStats moment_stats(unsigned long n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    RowSums s = row_sums(row_values(n));
    Rational mu = make_rational(s.gp1, s.g1);
    Rational sigma2 = make_rational(s.gpp1, s.g1) + mu - mu * mu;

    std::vector<Integer> central = central_prefix(n + 1);
    const Integer& tn = central[n];
    const Integer& tn1 = central[n - 1];
    if (!(s.g1 == tn)) throw theorem_violation("row sum disagrees with the central value");
    Rational closed = make_rational(Integer(n) * (tn - tn1), 2 * tn);
    if (!(mu == closed)) throw theorem_violation("mean closed form mismatch");
    return {n, mu, sigma2};
}

bool identity_2plus1(unsigned long n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    RowSums s = row_sums(row_values(n));
    Integer rhs = Integer(n) * Integer(n - 1) * central_prefix(n - 1).back();
    if (!(s.gpp1 + s.gp1 == rhs))
        throw theorem_violation("derivative identity sum disagrees with the central value");
    return true;
}

Rational ratio_gap(unsigned long n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    std::vector<Integer> central = central_prefix(n + 1);
    Rational gap = make_rational(central[n - 1], central[n]) - make_rational(1, 3);
    if (gap < 0) gap = -gap;
    return gap;
}

std::vector<Rational> gaussian_grid() {
    std::vector<Rational> grid;
    for (long i = 0; i <= 64; ++i) grid.push_back(make_rational(i - 32, 8));
    return grid;
}

double llt_gap(unsigned long n, const std::vector<Rational>& grid) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    check_grid(grid);
    MomentStats st = moment_stats(n);
    std::vector<Integer> row = row_values(n);
    Integer total;
    for (const Integer& v : row) total += v;

    double mu = st.mu.get_d();
    double sigma = std::sqrt(st.sigma2.get_d());
    double worst = 0.0;
    for (const Rational& x : grid) {
        double xd = x.get_d();
        double kf = std::floor(mu + xd * sigma);
        Rational p;
        if (kf >= 0 && kf < double(row.size()))
            p = make_rational(row[static_cast<unsigned long>(kf)], total);
        worst = std::max(worst, std::abs(sigma * p.get_d() - normal_density(xd)));
    }
    return worst;
}

double clt_gap(unsigned long n, const std::vector<Rational>& grid) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    check_grid(grid);
    MomentStats st = moment_stats(n);
    std::vector<Integer> row = row_values(n);
    std::vector<Integer> prefix(row.size());
    Integer acc;
    for (unsigned long k = 0; k < row.size(); ++k) {
        acc += row[k];
        prefix[k] = acc;
    }
    const Integer& total = prefix.back();

    double mu = st.mu.get_d();
    double sigma = std::sqrt(st.sigma2.get_d());
    double worst = 0.0;
    for (const Rational& x : grid) {
        double xd = x.get_d();
        double kf = std::floor(mu + xd * sigma);
        Rational mass;
        if (kf >= 0) {
            unsigned long idx = static_cast<unsigned long>(kf);
            if (idx >= prefix.size()) idx = prefix.size() - 1;
            mass = make_rational(prefix[idx], total);
        }
        worst = std::max(worst, std::abs(mass.get_d() - normal_cdf(xd)));
    }
    return worst;
}

}  // namespace trinomia
