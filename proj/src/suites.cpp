#include "trinomia/suites.hpp"

#include <chrono>
#include <stdexcept>

#include "trinomia/aigner.hpp"
#include "trinomia/limits.hpp"
#include "trinomia/positivity.hpp"
#include "trinomia/realroots.hpp"
#include "trinomia/riordan.hpp"
#include "trinomia/seqgen.hpp"
#include "trinomia/serialize.hpp"
#include "trinomia/structure.hpp"

namespace trinomia {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

constexpr long kGridLo = 1, kGridHi = 6;

Json minor_witness(const MinorReport<Integer>& w) {
    return Json{{"order", w.order}, {"rows", w.rows}, {"cols", w.cols}, {"value", dec(w.value)}};
}

const char* sm_str(SmVerdict v) {
    switch (v) {
        case SmVerdict::SM: return "SM";
        case SmVerdict::NotSM: return "NotSM";
        default: return "Inconclusive";
    }
}

// moment verdict against the sign test: a definite disagreement on the
// decisive side is a failure, a horizon effect is inconclusive
CheckRecord sm_point_record(long b, long c, unsigned long depth) {
    if (b < 1 || c < 1) throw std::invalid_argument("b and c must be positive");
    CheckRecord rec;
    rec.name = "moment-verdict";
    rec.params = Json{{"b", b}, {"c", c}, {"depth", depth}};
    Rational qb(b), qc(c);
    std::vector<Rational> seq = tbc_prefix_gen(qb, qc, 2 * depth + 2);
    SmVerdict v = sm_check(seq, depth);
    bool sign = b * b >= 4 * c;
    rec.values = Json{{"verdict", sm_str(v)}, {"sign_test", sign}};
    if (sign)
        rec.verdict = v == SmVerdict::SM
                          ? Verdict::Pass
                          : (v == SmVerdict::NotSM ? Verdict::Fail : Verdict::Inconclusive);
    else
        rec.verdict = v == SmVerdict::NotSM ? Verdict::Pass : Verdict::Inconclusive;
    if (rec.verdict == Verdict::Fail)
        rec.witness = Json{{"note", "negative minor under a nonnegative sign test"}};
    return rec;
}

}  // namespace

Report suite_agreement(unsigned long symbolic_max, unsigned long grid_max) {
    auto t0 = Clock::now();
    Report r;
    r.suite = "agreement";

    std::vector<BiPoly> rec = tbc_symbolic_prefix(symbolic_max + 1);
    std::vector<BiPoly> ser = tbc_series_symbolic(symbolic_max);
    for (unsigned long n = 0; n <= symbolic_max; ++n) {
        BiPoly direct = tbc_symbolic_direct(n);
        BiPoly expand = trinomial_expand_symbolic(n);
        bool ok = rec[n] == direct && rec[n] == expand && rec[n] == ser[n];
        CheckRecord c;
        c.name = "routes-symbolic";
        c.params = Json{{"n", n}};
        c.values = Json{{"value", poly_terms_json(rec[n])}};
        c.verdict = ok ? Verdict::Pass : Verdict::Fail;
        r.checks.push_back(std::move(c));
    }

    for (long b = kGridLo; b <= kGridHi; ++b)
        for (long cc = kGridLo; cc <= kGridHi; ++cc) {
            Rational qb(b), qc(cc);
            std::vector<Rational> pre = tbc_prefix_gen(qb, qc, grid_max + 1);
            std::vector<Rational> sg = tbc_series_gen(qb, qc, grid_max);
            CheckRecord c;
            c.name = "routes-grid";
            c.params = Json{{"b", b}, {"c", cc}, {"max_n", grid_max}};
            c.verdict = Verdict::Pass;
            for (unsigned long n = 0; n <= grid_max; ++n) {
                Rational direct = tbc_number_direct(qb, qc, n);
                Rational expand = trinomial_expand_oracle(qb, qc, n);
                if (!(pre[n] == direct && pre[n] == expand && pre[n] == sg[n])) {
                    c.verdict = Verdict::Fail;
                    c.witness = Json{{"n", n},
                                     {"recurrence", dec(pre[n])},
                                     {"direct", dec(direct)},
                                     {"expansion", dec(expand)},
                                     {"series", dec(sg[n])}};
                    break;
                }
            }
            r.checks.push_back(std::move(c));
        }
    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_hankel(unsigned long max_n, bool symbolic) {
    auto t0 = Clock::now();
    Report r;
    r.suite = symbolic ? "hankel-symbolic" : "hankel-grid";

    if (symbolic) {
        std::vector<BiPoly> t = tbc_symbolic_prefix(2 * max_n + 2);
        std::vector<BiPoly> u =
            j_leading_minors(BiPoly::var1(), BiPoly::var2(), max_n);
        for (unsigned long n = 0; n <= max_n; ++n) {
            BiPoly hd = hankel_det(t, n);
            BiPoly expected = BiPoly::monomial(0, std::uint32_t(n * (n + 1) / 2),
                                               pow_int(Integer(2), n));
            CheckRecord c;
            c.name = "determinant";
            c.params = Json{{"n", n}, {"symbolic", true}};
            c.values = Json{{"computed", poly_terms_json(hd)},
                            {"expected", poly_terms_json(expected)},
                            {"equal", hd == expected}};
            c.verdict = hd == expected ? Verdict::Pass : Verdict::Fail;
            r.checks.push_back(std::move(c));

            BiPoly sd = shifted_hankel_det(t, n);
            BiPoly sexpected = expected * u[n];
            CheckRecord s;
            s.name = "shifted-determinant";
            s.params = Json{{"n", n}, {"symbolic", true}};
            s.values = Json{{"computed", poly_terms_json(sd)},
                            {"expected", poly_terms_json(sexpected)},
                            {"equal", sd == sexpected}};
            s.verdict = sd == sexpected ? Verdict::Pass : Verdict::Fail;
            r.checks.push_back(std::move(s));
        }
    } else {
        for (long b = kGridLo; b <= kGridHi; ++b)
            for (long cc = kGridLo; cc <= kGridHi; ++cc) {
                Rational qb(b), qc(cc);
                std::vector<Rational> seq = tbc_prefix_gen(qb, qc, 2 * max_n + 2);
                std::vector<Rational> u = j_leading_minors(qb, qc, max_n);
                CheckRecord c;
                c.name = "determinants";
                c.params = Json{{"b", b}, {"c", cc}, {"max_n", max_n}};
                c.verdict = Verdict::Pass;
                for (unsigned long n = 0; n <= max_n && c.verdict == Verdict::Pass; ++n) {
                    Rational scale = pow_rat(qc, n * (n + 1) / 2) * Rational(pow_int(Integer(2), n));
                    Rational hd = hankel_det(seq, n);
                    Rational sd = shifted_hankel_det(seq, n);
                    Rational sexpected = scale * u[n];
                    if (!(hd == scale && sd == sexpected))
                        c.witness = Json{{"n", n},
                                         {"computed", dec(hd)},
                                         {"expected", dec(scale)},
                                         {"computed_shifted", dec(sd)},
                                         {"expected_shifted", dec(sexpected)}};
                    if (!c.witness.is_null()) c.verdict = Verdict::Fail;
                }
                r.checks.push_back(std::move(c));
            }
    }
    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_interlace(unsigned long max_n, unsigned jobs) {
    auto t0 = Clock::now();
    Report r;
    r.suite = "interlace";
    FiskReport f = verify_fisk(max_n, jobs);
    for (const FiskEntry& e : f.entries) {
        CheckRecord c;
        c.name = "row-polynomial";
        c.params = Json{{"n", e.n}};
        bool ok = e.real_rooted && e.next_ok && e.skip_ok;
        c.values = Json{{"real_rooted", e.real_rooted},
                        {"interlaces_next", e.next_ok},
                        {"interlaces_skip", e.skip_ok},
                        {"iso_width", dec(e.iso_width)},
                        {"iso_width_float", e.iso_width.get_d()}};
        c.verdict = ok ? Verdict::Pass : Verdict::Fail;
        if (!ok) c.witness = Json{{"note", f.first_failure}};
        r.checks.push_back(std::move(c));
    }
    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_tp(std::size_t block, std::size_t j_size, unsigned jobs) {
    auto t0 = Clock::now();
    Report r;
    r.suite = "tp";

    TpResult<Integer> res =
        is_tp(triangle_to_mat(tu_triangle(block)), block, jobs ? jobs : default_jobs());
    CheckRecord c;
    c.name = "triangle-all-orders";
    c.params = Json{{"size", block}};
    c.values = Json{{"totally_positive", res.tp}};
    c.verdict = res.tp ? Verdict::Pass : Verdict::Fail;
    if (!res.tp) c.witness = minor_witness(res.witness);
    r.checks.push_back(std::move(c));

    for (long b = kGridLo; b <= kGridHi; ++b)
        for (long cc = kGridLo; cc <= kGridHi; ++cc) {
            bool t2 = tp2_of_j(Integer(b), Integer(cc), j_size);
            bool sign = b * b >= 2 * cc;
            CheckRecord g;
            g.name = "grid-tp2";
            g.params = Json{{"b", b}, {"c", cc}, {"size", j_size}};
            g.values = Json{{"tp2", t2}, {"sign_test", sign}};
            g.verdict = t2 == sign ? Verdict::Pass : Verdict::Fail;
            r.checks.push_back(std::move(g));
        }
    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_sm(unsigned long depth) {
    auto t0 = Clock::now();
    Report r;
    r.suite = "sm";
    for (long b = kGridLo; b <= kGridHi; ++b)
        for (long cc = kGridLo; cc <= kGridHi; ++cc)
            r.checks.push_back(sm_point_record(b, cc, depth));
    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_sm_point(long b, long c, unsigned long depth) {
    auto t0 = Clock::now();
    Report r;
    r.suite = "sm";
    r.checks.push_back(sm_point_record(b, c, depth));
    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_criteria() {
    auto t0 = Clock::now();
    Report r;
    r.suite = "criteria";
    for (long b = kGridLo; b <= kGridHi; ++b)
        for (long cc = kGridLo; cc <= kGridHi; ++cc) {
            CheckRecord c;
            c.name = "sign-equivalence";
            c.params = Json{{"b", b}, {"c", cc}};
            bool lc_sign = b * b >= 2 * cc;
            bool sm_sign = b * b >= 4 * cc;
            try {
                CriteriaVerdict v = tbc_criteria(Rational(b), Rational(cc));
                c.values = Json{{"log_convex", v.log_convex},
                                {"sm", v.sm},
                                {"log_convex_sign", lc_sign},
                                {"sm_sign", sm_sign}};
                c.verdict = (v.log_convex == lc_sign && v.sm == sm_sign) ? Verdict::Pass
                                                                         : Verdict::Fail;
            } catch (const theorem_violation& e) {
                c.verdict = Verdict::Fail;
                c.witness = Json{{"note", e.what()}};
            }
            r.checks.push_back(std::move(c));
        }
    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_riordan(std::size_t depth) {
    auto t0 = Clock::now();
    Report r;
    r.suite = "riordan";

    Triangle<BiPoly> tri = recursive_matrix(tbc_spec_symbolic(), depth);
    AZPair<BiPoly> az = extract_az(tri);
    std::vector<BiPoly> want_a{BiPoly(1L), BiPoly::var1(), BiPoly::var2()};
    BiPoly two_c = BiPoly(2L) * BiPoly::var2();
    std::vector<BiPoly> want_z{BiPoly::var1(), two_c};

    auto poly_list = [](const std::vector<BiPoly>& v) {
        Json a = Json::array();
        for (const BiPoly& p : v) a.push_back(poly_terms_json(p));
        return a;
    };

    CheckRecord ca;
    ca.name = "a-sequence";
    ca.params = Json{{"depth", depth}};
    ca.values = Json{{"computed", poly_list(az.a)}, {"expected", poly_list(want_a)}};
    ca.verdict = az.a == want_a ? Verdict::Pass : Verdict::Fail;
    r.checks.push_back(std::move(ca));

    CheckRecord cz;
    cz.name = "z-sequence";
    cz.params = Json{{"depth", depth}};
    cz.values = Json{{"computed", poly_list(az.z)}, {"expected", poly_list(want_z)}};
    cz.verdict = az.z == want_z ? Verdict::Pass : Verdict::Fail;
    r.checks.push_back(std::move(cz));

    bool round = riordan_matrix(gf_from_az(az, depth)) == tri;
    CheckRecord cr;
    cr.name = "round-trip";
    cr.params = Json{{"depth", depth}};
    cr.values = Json{{"equal", round}};
    cr.verdict = round ? Verdict::Pass : Verdict::Fail;
    r.checks.push_back(std::move(cr));

    bool pair = riordan_matrix(tbc_riordan(depth)) == tri;
    CheckRecord cp;
    cp.name = "series-pair";
    cp.params = Json{{"depth", depth}};
    cp.values = Json{{"equal", pair}};
    cp.verdict = pair ? Verdict::Pass : Verdict::Fail;
    r.checks.push_back(std::move(cp));

    bool residual_zero = motzkin_quadratic_residual(depth).is_zero();
    CheckRecord cq;
    cq.name = "quadratic-residual";
    cq.params = Json{{"order", depth}};
    cq.values = Json{{"zero", residual_zero}};
    cq.verdict = residual_zero ? Verdict::Pass : Verdict::Fail;
    r.checks.push_back(std::move(cq));

    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_binomial(const std::vector<long>& a_values, unsigned long max_n) {
    auto t0 = Clock::now();
    Report r;
    r.suite = "binomial";
    for (long a : a_values) {
        CheckRecord c;
        c.name = "shift-identity";
        c.params = Json{{"a", a}, {"max_n", max_n}};
        c.verdict = Verdict::Pass;
        BiPoly ap(a);
        BiPoly b = BiPoly::var1(), cc = BiPoly::var2();
        try {
            for (unsigned long n = 0; n <= max_n; ++n) binomial_transform(b, cc, ap, n);
        } catch (const theorem_violation& e) {
            c.verdict = Verdict::Fail;
            c.witness = Json{{"note", e.what()}};
        }
        r.checks.push_back(std::move(c));
    }
    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_tli(unsigned long max_sum, unsigned jobs) {
    auto t0 = Clock::now();
    Report r;
    r.suite = "tli";
    PairMinorReport rep = verify_tli(max_sum, jobs);
    for (const PairMinorEntry& e : rep.entries) {
        CheckRecord c;
        c.name = "pair-minor";
        c.params = Json{{"i", e.i}, {"j", e.j}};
        c.values = Json{{"parity", e.parity == Parity::Even ? "even" : "odd"},
                        {"f", poly_terms_json(e.f)}};
        c.verdict = e.ok ? Verdict::Pass : Verdict::Fail;
        if (!e.ok) c.witness = Json{{"note", e.note}};
        r.checks.push_back(std::move(c));
    }
    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_motzkin(unsigned long max_n, unsigned jobs) {
    auto t0 = Clock::now();
    Report r;
    r.suite = "motzkin";
    MotzkinSuiteReport rep = motzkin_suite(max_n, jobs);

    auto item = [&](const char* name, bool ok) {
        CheckRecord c;
        c.name = name;
        c.params = Json{{"max_n", max_n}};
        c.verdict = ok ? Verdict::Pass : Verdict::Fail;
        if (!ok) c.witness = Json{{"notes", rep.failures}};
        r.checks.push_back(std::move(c));
    };
    item("c-derivative", rep.c_derivative_ok);
    item("b-derivative-shift", rep.b_shift_ok);
    item("binomial-shift", rep.binomial_ok);

    for (const PairMinorEntry& e : rep.minors.entries) {
        CheckRecord c;
        c.name = "pair-minor";
        c.params = Json{{"i", e.i}, {"j", e.j}};
        c.values = Json{{"parity", e.parity == Parity::Even ? "even" : "odd"},
                        {"g", poly_terms_json(e.f)}};
        c.verdict = e.ok ? Verdict::Pass : Verdict::Fail;
        if (!e.ok) c.witness = Json{{"note", e.note}};
        r.checks.push_back(std::move(c));
    }

    for (std::size_t n = 0; n < rep.diagonal.size(); ++n) {
        CheckRecord c;
        c.name = "consecutive-minor";
        c.params = Json{{"n", n}};
        c.values = Json{{"g", unipoly_json(rep.diagonal[n])}};
        c.verdict = Verdict::Pass;
        r.checks.push_back(std::move(c));
    }
    if (rep.diagonal.size() + 2 != max_n + 1) {
        CheckRecord c;
        c.name = "consecutive-minors-complete";
        c.params = Json{{"max_n", max_n}};
        c.verdict = Verdict::Fail;
        c.witness = Json{{"notes", rep.failures}};
        r.checks.push_back(std::move(c));
    }
    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_limits(const std::vector<unsigned long>& ladder, unsigned long ratio_n,
                    unsigned long variance_n) {
    auto t0 = Clock::now();
    Report r;
    r.suite = "limits";

    Rational gap = ratio_gap(ratio_n);
    Rational gap_bound = make_rational(Integer(1), Integer(500));
    CheckRecord cr;
    cr.name = "central-ratio";
    cr.params = Json{{"n", ratio_n}};
    cr.values =
        Json{{"gap", dec(gap)}, {"gap_float", gap.get_d()}, {"bound", dec(gap_bound)}};
    cr.verdict = gap <= gap_bound ? Verdict::Pass : Verdict::Fail;
    r.checks.push_back(std::move(cr));

    MomentStats st = moment_stats(variance_n);
    Rational scaled = st.sigma2 * Rational(18);
    scaled /= Rational(long(variance_n));
    Rational dev = abs(Rational(scaled - 1));
    Rational dev_bound = make_rational(Integer(1), Integer(50));
    CheckRecord cv;
    cv.name = "variance-scale";
    cv.params = Json{{"n", variance_n}};
    cv.values = Json{{"mu", dec(st.mu)},
                     {"sigma2", dec(st.sigma2)},
                     {"deviation", dec(dev)},
                     {"deviation_float", dev.get_d()},
                     {"bound", dec(dev_bound)}};
    cv.verdict = dev <= dev_bound ? Verdict::Pass : Verdict::Fail;
    r.checks.push_back(std::move(cv));

    Rational mean_ratio = st.mu / Rational(long(variance_n));
    bool mean_ok = mean_ratio > make_rational(Integer(3), Integer(10)) &&
                   mean_ratio < make_rational(Integer(17), Integer(50));
    CheckRecord cm;
    cm.name = "mean-scale";
    cm.params = Json{{"n", variance_n}};
    cm.values = Json{{"mu_over_n", dec(mean_ratio)}, {"mu_over_n_float", mean_ratio.get_d()}};
    cm.verdict = mean_ok ? Verdict::Pass : Verdict::Fail;
    r.checks.push_back(std::move(cm));

    std::vector<Rational> grid = gaussian_grid();
    std::vector<double> gaps;
    for (unsigned long n : ladder) {
        double g = llt_gap(n, grid);
        gaps.push_back(g);
        CheckRecord c;
        c.name = "llt-gap";
        c.params = Json{{"n", n}};
        c.values = Json{{"gap_float", g}};
        c.verdict = Verdict::Pass;
        r.checks.push_back(std::move(c));
    }
    bool mono = true;
    for (std::size_t k = 1; k < gaps.size(); ++k) mono = mono && gaps[k] < gaps[k - 1];
    CheckRecord cl;
    cl.name = "llt-monotone";
    cl.params = Json{{"ladder", ladder}};
    cl.values = Json{{"gaps_float", gaps}};
    cl.verdict = mono ? Verdict::Pass : Verdict::Fail;
    r.checks.push_back(std::move(cl));

    if (!ladder.empty()) {
        double cg = clt_gap(ladder.back(), grid);
        CheckRecord cc;
        cc.name = "clt-gap";
        cc.params = Json{{"n", ladder.back()}};
        cc.values = Json{{"gap_float", cg}, {"bound_float", 0.05}};
        cc.verdict = cg <= 0.05 ? Verdict::Pass : Verdict::Fail;
        r.checks.push_back(std::move(cc));
    }
    r.wall_ms = ms_since(t0);
    return r;
}

Report suite_fundamental(unsigned long max_sum) {
    auto t0 = Clock::now();
    Report r;
    r.suite = "fundamental";

    RecursiveSpec<BiPoly> spec = tbc_spec_symbolic();
    Triangle<BiPoly> rows = recursive_matrix(spec, max_sum);
    std::vector<BiPoly> delta = delta_weights(spec, max_sum / 2);

    for (unsigned long m = 0; 2 * m <= max_sum; ++m)
        for (unsigned long n = m; m + n <= max_sum; ++n) {
            BiPoly lhs;
            for (unsigned long k = 0; k <= m; ++k) lhs += rows[m][k] * rows[n][k] * delta[k];
            bool ok = lhs == rows[m + n][0];
            CheckRecord c;
            c.name = "orthogonality-sum";
            c.params = Json{{"m", m}, {"n", n}};
            c.values = Json{{"value", poly_terms_json(rows[m + n][0])}, {"equal", ok}};
            c.verdict = ok ? Verdict::Pass : Verdict::Fail;
            r.checks.push_back(std::move(c));
        }

    // exercise the full operation (sum plus Hankel decomposition) on the
    // diagonal, where the deep triangle stays small
    for (unsigned long m : {max_sum / 4, max_sum / 2}) {
        CheckRecord c;
        c.name = "orthogonality-op";
        c.params = Json{{"m", m}, {"n", m}};
        try {
            BiPoly v = verify_fundamental(spec, m, m);
            c.values = Json{{"value", poly_terms_json(v)}};
            c.verdict = Verdict::Pass;
        } catch (const theorem_violation& e) {
            c.verdict = Verdict::Fail;
            c.witness = Json{{"note", e.what()}};
        }
        r.checks.push_back(std::move(c));
    }
    r.wall_ms = ms_since(t0);
    return r;
}

Report report_all(const std::string& profile, unsigned jobs) {
    bool full = profile == "full";
    if (!full && profile != "quick")
        throw std::invalid_argument("profile must be quick or full");
    std::vector<Report> parts;
    if (full) {
        parts.push_back(suite_agreement(15, 50));
        parts.push_back(suite_hankel(8, true));
        parts.push_back(suite_hankel(10, false));
        parts.push_back(suite_interlace(60, jobs));
        parts.push_back(suite_tp(8, 10, jobs));
        parts.push_back(suite_sm(10));
        parts.push_back(suite_criteria());
        parts.push_back(suite_riordan(12));
        parts.push_back(suite_binomial({1, 2, 3}, 15));
        parts.push_back(suite_tli(14, jobs));
        parts.push_back(suite_motzkin(12, jobs));
        parts.push_back(suite_limits({200, 800, 3200}, 5000, 2000));
        parts.push_back(suite_fundamental(20));
    } else {
        parts.push_back(suite_agreement(8, 20));
        parts.push_back(suite_hankel(4, true));
        parts.push_back(suite_hankel(6, false));
        parts.push_back(suite_interlace(20, jobs));
        parts.push_back(suite_tp(6, 6, jobs));
        parts.push_back(suite_sm(6));
        parts.push_back(suite_criteria());
        parts.push_back(suite_riordan(8));
        parts.push_back(suite_binomial({1, 2}, 8));
        parts.push_back(suite_tli(8, jobs));
        parts.push_back(suite_motzkin(8, jobs));
        parts.push_back(suite_limits({200, 800}, 800, 800));
        parts.push_back(suite_fundamental(10));
    }
    return merge_reports(full ? "report-all-full" : "report-all-quick", parts);
}

}  // namespace trinomia
