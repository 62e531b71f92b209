#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trinomia/aigner.hpp"
#include "trinomia/bipoly.hpp"
#include "trinomia/errors.hpp"
#include "trinomia/seqgen.hpp"
#include "trinomia/serialize.hpp"
#include "trinomia/suites.hpp"

using namespace trinomia;

namespace {

std::vector<std::vector<Rational>> to_rational_rows(const Triangle<Integer>& t) {
    std::vector<std::vector<Rational>> rows(t.size());
    for (std::size_t n = 0; n < t.size(); ++n)
        for (const Integer& z : t[n]) rows[n].emplace_back(z);
    return rows;
}

Json rows_json(const std::vector<std::vector<Rational>>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json r = Json::array();
        for (const Rational& q : row) r.push_back(dec(q));
        out.push_back(std::move(r));
    }
    return out;
}

Json values_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const Rational& q : values) out.push_back(dec(q));
    return out;
}

Json polys_json(const std::vector<BiPoly>& polys) {
    Json out = Json::array();
    for (const BiPoly& p : polys) out.push_back(poly_terms_json(p));
    return out;
}

void emit_json(const Json& j, const std::string& out_path) {
    emit_output(j.dump(2) + "\n", out_path);
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenFlags {
    unsigned long n = 10, rows = 6;
    long b = 1, c = 1;
    bool symbolic = false;
    std::string format = "csv", out;
};

void check_gen_format(const GenFlags& g) {
    if (g.format != "csv" && g.format != "json") throw UsageError("format must be csv or json");
    if (g.symbolic && g.format == "csv")
        throw UsageError("symbolic output has no CSV form; use --format json");
}

int run_gen_tnk(const GenFlags& g) {
    auto rows = to_rational_rows(tu_triangle(g.rows));
    if (g.format == "csv")
        emit_output(csv_lines(rows), g.out);
    else
        emit_json(Json{{"triangle", rows_json(rows)}}, g.out);
    return 0;
}

int run_gen_sequence(const GenFlags& g, bool motzkin) {
    if (g.symbolic) {
        std::vector<BiPoly> polys;
        if (motzkin) {
            for (unsigned long k = 0; k <= g.n; ++k) polys.push_back(motzkin_symbolic(k));
        } else {
            polys = tbc_symbolic_prefix(g.n + 1);
        }
        emit_json(Json{{"polys", polys_json(polys)}}, g.out);
        return 0;
    }
    Rational qb(g.b), qc(g.c);
    std::vector<Rational> values;
    if (motzkin) {
        for (unsigned long k = 0; k <= g.n; ++k) values.push_back(motzkin_number(qb, qc, k));
    } else {
        values = tbc_prefix_gen(qb, qc, g.n + 1);
    }
    if (g.format == "csv")
        emit_output(csv_line(values) + "\n", g.out);
    else
        emit_json(Json{{"values", values_json(values)}}, g.out);
    return 0;
}

int run_gen_laurent(const GenFlags& g) {
    std::vector<BiPoly> row;
    for (long k = -long(g.n); k <= long(g.n); ++k) row.push_back(laurent_entry(g.n, k));
    if (g.symbolic) {
        emit_json(Json{{"polys", polys_json(row)}}, g.out);
        return 0;
    }
    Rational qb(g.b), qc(g.c);
    std::vector<Rational> values;
    for (const BiPoly& p : row) values.push_back(bipoly_eval(p, qb, qc));
    if (g.format == "csv")
        emit_output(csv_line(values) + "\n", g.out);
    else
        emit_json(Json{{"values", values_json(values)}}, g.out);
    return 0;
}

int run_gen_triangle(const GenFlags& g) {
    if (g.rows == 0) throw UsageError("--rows must be positive");
    if (g.symbolic) {
        Triangle<BiPoly> t = recursive_matrix(tbc_spec_symbolic(), g.rows - 1);
        Json out = Json::array();
        for (const auto& row : t) out.push_back(polys_json(row));
        emit_json(Json{{"triangle", out}}, g.out);
        return 0;
    }
    Rational qb(g.b), qc(g.c);
    Triangle<Rational> t = recursive_matrix(tbc_spec(qb, qc), g.rows - 1);
    if (g.format == "csv")
        emit_output(csv_lines(t), g.out);
    else
        emit_json(Json{{"triangle", rows_json(t)}}, g.out);
    return 0;
}

int emit_report(Report rep, bool inject_fault, const std::string& out_path) {
    if (inject_fault && !rep.checks.empty()) {
        rep.checks[0].verdict = Verdict::Fail;
        rep.checks[0].witness = Json{{"note", "injected fault"}};
    }
    emit_output(report_text(rep), out_path);
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact generators and verifiers for two-parameter central coefficient families"};
    app.require_subcommand(1);

    GenFlags g;
    unsigned long max_n = 0, max_sum = 0, depth = 0;
    long point_b = 0, point_c = 0, a_value = 0;
    unsigned jobs = 0;
    bool symbolic_verify = false, inject_fault = false;
    std::string out, profile = "quick";
    std::vector<unsigned long> ladder{200, 800, 3200};

    CLI::App* gen = app.add_subcommand("gen", "emit exact values, rows, or polynomials");
    gen->require_subcommand(1);
    auto add_gen_common = [&](CLI::App* sub, bool with_bc, bool with_symbolic) {
        sub->add_option("--format", g.format, "csv or json")->capture_default_str();
        sub->add_option("--out", g.out, "write output to this path instead of stdout");
        if (with_bc) {
            sub->add_option("--b", g.b, "first parameter")->capture_default_str();
            sub->add_option("--c", g.c, "second parameter")->capture_default_str();
        }
        if (with_symbolic)
            sub->add_flag("--symbolic", g.symbolic, "emit polynomials (json only)");
    };
    CLI::App* gen_tnk = gen->add_subcommand("tnk", "coefficient triangle of the central family");
    gen_tnk->add_option("--rows", g.rows, "row count")->capture_default_str();
    add_gen_common(gen_tnk, false, false);
    CLI::App* gen_tbc = gen->add_subcommand("tbc", "central coefficient sequence");
    gen_tbc->add_option("--n", g.n, "emit indices 0..n")->capture_default_str();
    add_gen_common(gen_tbc, true, true);
    CLI::App* gen_motzkin = gen->add_subcommand("motzkin", "companion sequence");
    gen_motzkin->add_option("--n", g.n, "emit indices 0..n")->capture_default_str();
    add_gen_common(gen_motzkin, true, true);
    CLI::App* gen_laurent = gen->add_subcommand("laurent", "one row of the symmetric expansion");
    gen_laurent->add_option("--n", g.n, "row index")->capture_default_str();
    add_gen_common(gen_laurent, true, true);
    CLI::App* gen_triangle = gen->add_subcommand("triangle", "recursive triangle rows");
    gen_triangle->add_option("--rows", g.rows, "row count")->capture_default_str();
    add_gen_common(gen_triangle, true, true);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite, emit a JSON report");
    verify->require_subcommand(1);
    auto add_verify_common = [&](CLI::App* sub) {
        sub->add_option("--out", out, "write the report to this path instead of stdout");
        sub->add_option("--jobs", jobs, "worker threads (default: TRINOMIA_JOBS or all cores)");
        sub->add_flag("--inject-fault", inject_fault)->group("");  // exit-code conformance hook
    };
    CLI::App* v_hankel = verify->add_subcommand("hankel", "determinant closed forms");
    unsigned long hankel_n = 6;
    v_hankel->add_option("--n", hankel_n, "top determinant order")->capture_default_str();
    v_hankel->add_flag("--symbolic", symbolic_verify, "verify in the polynomial ring");
    add_verify_common(v_hankel);
    CLI::App* v_interlace = verify->add_subcommand("interlace", "row polynomial root interlacing");
    max_n = 20;
    v_interlace->add_option("--max-n", max_n, "top row index")->capture_default_str();
    add_verify_common(v_interlace);
    CLI::App* v_tp = verify->add_subcommand("tp", "total positivity of the leading block");
    unsigned long tp_rows = 8;
    v_tp->add_option("--rows", tp_rows, "leading block size")->capture_default_str();
    add_verify_common(v_tp);
    CLI::App* v_sm = verify->add_subcommand("sm", "moment verdicts against the sign test");
    depth = 10;
    v_sm->add_option("--depth", depth, "determinant depth")->capture_default_str();
    CLI::Option* opt_b = v_sm->add_option("--b", point_b, "check a single point");
    CLI::Option* opt_c = v_sm->add_option("--c", point_c, "check a single point");
    add_verify_common(v_sm);
    CLI::App* v_criteria = verify->add_subcommand("criteria", "log-convexity and moment signs");
    add_verify_common(v_criteria);
    CLI::App* v_riordan = verify->add_subcommand("riordan", "array identification and round trip");
    unsigned long riordan_depth = 12;
    v_riordan->add_option("--depth", riordan_depth, "triangle depth")->capture_default_str();
    add_verify_common(v_riordan);
    CLI::App* v_binomial = verify->add_subcommand("binomial", "parameter shift identity");
    unsigned long binomial_max = 15;
    v_binomial->add_option("--a", a_value, "single shift (default: 1, 2, and 3)");
    v_binomial->add_option("--max-n", binomial_max, "top index")->capture_default_str();
    add_verify_common(v_binomial);
    CLI::App* v_tli = verify->add_subcommand("tli", "pairwise minor factorization");
    max_sum = 14;
    v_tli->add_option("--max-sum", max_sum, "bound on i + j")->capture_default_str();
    add_verify_common(v_tli);
    CLI::App* v_motzkin = verify->add_subcommand("motzkin", "companion identity suite");
    unsigned long motzkin_max = 12;
    v_motzkin->add_option("--max-n", motzkin_max, "top index")->capture_default_str();
    add_verify_common(v_motzkin);
    CLI::App* v_limits = verify->add_subcommand("limits", "normal limit witnesses");
    unsigned long ratio_n = 5000;
    v_limits->add_option("--n", ratio_n, "index for the ratio witness")->capture_default_str();
    v_limits->add_option("--n-ladder", ladder, "row sizes for the distribution gaps")
        ->delimiter(',')
        ->capture_default_str();
    add_verify_common(v_limits);
    CLI::App* v_fundamental = verify->add_subcommand("fundamental", "orthogonality identity");
    unsigned long fund_max = 20;
    v_fundamental->add_option("--max-sum", fund_max, "bound on m + n")->capture_default_str();
    add_verify_common(v_fundamental);

    CLI::App* report = app.add_subcommand("report", "aggregate runs");
    report->require_subcommand(1);
    CLI::App* report_all_cmd = report->add_subcommand("all", "every suite at a profile's bounds");
    report_all_cmd->add_option("--profile", profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    add_verify_common(report_all_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen_tnk->parsed() || gen_tbc->parsed() || gen_motzkin->parsed() ||
            gen_laurent->parsed() || gen_triangle->parsed())
            check_gen_format(g);
        if (gen_tnk->parsed()) return run_gen_tnk(g);
        if (gen_tbc->parsed()) return run_gen_sequence(g, false);
        if (gen_motzkin->parsed()) return run_gen_sequence(g, true);
        if (gen_laurent->parsed()) return run_gen_laurent(g);
        if (gen_triangle->parsed()) return run_gen_triangle(g);

        if (v_hankel->parsed())
            return emit_report(suite_hankel(hankel_n, symbolic_verify), inject_fault, out);
        if (v_interlace->parsed())
            return emit_report(suite_interlace(max_n, jobs), inject_fault, out);
        if (v_tp->parsed()) return emit_report(suite_tp(tp_rows, 10, jobs), inject_fault, out);
        if (v_sm->parsed()) {
            bool point = opt_b->count() > 0 || opt_c->count() > 0;
            if (point && (opt_b->count() == 0 || opt_c->count() == 0))
                throw UsageError("--b and --c must be given together");
            Report rep = point ? suite_sm_point(point_b, point_c, depth) : suite_sm(depth);
            return emit_report(std::move(rep), inject_fault, out);
        }
        if (v_criteria->parsed()) return emit_report(suite_criteria(), inject_fault, out);
        if (v_riordan->parsed())
            return emit_report(suite_riordan(riordan_depth), inject_fault, out);
        if (v_binomial->parsed()) {
            std::vector<long> a_values{1, 2, 3};
            if (a_value != 0) a_values = {a_value};
            return emit_report(suite_binomial(a_values, binomial_max), inject_fault, out);
        }
        if (v_tli->parsed()) return emit_report(suite_tli(max_sum, jobs), inject_fault, out);
        if (v_motzkin->parsed())
            return emit_report(suite_motzkin(motzkin_max, jobs), inject_fault, out);
        if (v_limits->parsed())
            return emit_report(suite_limits(ladder, ratio_n, 2000), inject_fault, out);
        if (v_fundamental->parsed())
            return emit_report(suite_fundamental(fund_max), inject_fault, out);
        if (report_all_cmd->parsed())
            return emit_report(report_all(profile, jobs), inject_fault, out);
        throw UsageError("no subcommand selected");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const theorem_violation& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
