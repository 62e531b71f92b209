#include "trinomia/realroots.hpp"

#include <algorithm>
#include <stdexcept>

#include "trinomia/parallel.hpp"
#include "trinomia/seqgen.hpp"

namespace trinomia {

namespace {

std::vector<Integer> integer_image(const UniPoly& p) {
    // p comes out of primitive(), so every coefficient has denominator 1
    std::vector<Integer> z;
    z.reserve(std::size_t(p.degree() + 1));
    for (auto& q : p.coeffs()) z.push_back(Integer(q.get_num()));
    return z;
}

}  // namespace

SturmChain::SturmChain(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    polys_.push_back(f.primitive());
    UniPoly d = polys_[0].derivative();
    if (!d.is_zero()) {
        polys_.push_back(d.primitive());
        while (true) {
            UniPoly r = polys_[polys_.size() - 2].rem(polys_.back());
            if (r.is_zero()) break;
            polys_.push_back((-r).primitive());
        }
    }
    z_.reserve(polys_.size());
    for (auto& p : polys_) z_.push_back(integer_image(p));
}

int sign_at(const std::vector<Integer>& p, const Integer& num, const Integer& den) {
    if (p.empty()) return 0;
    Integer acc = p.back();
    Integer dp = 1;
    for (std::size_t k = p.size() - 1; k-- > 0;) {
        dp *= den;
        acc = acc * num + p[k] * dp;
    }
    return sign_of(acc);
}

int SturmChain::variations_at(const Rational& x) const {
    Integer num(x.get_num()), den(x.get_den());
    int last = 0, var = 0;
    for (auto& zp : z_) {
        int s = sign_at(zp, num, den);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int SturmChain::sign_of_f(const Rational& x) const {
    return sign_at(z_.front(), Integer(x.get_num()), Integer(x.get_den()));
}

Rational cauchy_root_bound(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    Rational lead = abs(f.leading());
    Rational m(0);
    for (int k = 0; k < f.degree(); ++k) {
        Rational a = abs(f.coeff(std::size_t(k)));
        if (a > m) m = a;
    }
    return Rational(1) + m / lead;
}

unsigned long count_roots(const SturmChain& chain, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("empty interval");
    if (chain.sign_of_f(lo) == 0 || chain.sign_of_f(hi) == 0)
        throw std::invalid_argument("endpoint is a root");
    return (unsigned long)(chain.variations_at(lo) - chain.variations_at(hi));
}

unsigned long count_roots(const UniPoly& f, const Rational& lo, const Rational& hi) {
    return count_roots(SturmChain(f), lo, hi);
}

bool is_real_rooted(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (f.degree() == 0) return true;
    UniPoly g = poly_gcd(f, f.derivative());
    if (g.degree() > 0) return is_real_rooted(f.divided_by(g)) && is_real_rooted(g);
    Rational bnd = cauchy_root_bound(f);
    return count_roots(f, -bnd, bnd) == (unsigned long)f.degree();
}

namespace {

// Midpoint of (a, b), nudged right by halving dyadic offsets until it misses
// every root of f. The nudges stay inside (a, b) and only finitely many
// points can hit roots, so this terminates.
Rational split_point(const SturmChain& chain, const Rational& a, const Rational& b) {
    Rational m = (a + b) / 2;
    Rational step = (b - a) / 4;
    while (chain.sign_of_f(m) == 0) {
        m += step;
        step /= 2;
    }
    return m;
}

struct Bracket {
    Rational a, b;
    int va, vb;  // cached variation counts at the endpoints
};

// Replaces a one-root bracket by whichever half still holds the root.
void tighten(const SturmChain& chain, Bracket& nd) {
    Rational m = split_point(chain, nd.a, nd.b);
    int vm = chain.variations_at(m);
    if (nd.va - vm == 1) {
        nd.b = m;
        nd.vb = vm;
    } else {
        nd.a = m;
        nd.va = vm;
    }
}

// Splits (-B, B] into one-root brackets; stops refining a bracket once its
// width reaches `width` (pass 0 width to stop at isolation). Returns brackets
// in no particular order; count short of deg f means f is not real-rooted.
std::vector<Bracket> bracket_roots(const SturmChain& chain, const UniPoly& f,
                                   const Rational& width) {
    Rational bnd = cauchy_root_bound(f);
    Bracket whole{-bnd, bnd, 0, 0};
    whole.va = chain.variations_at(whole.a);
    whole.vb = chain.variations_at(whole.b);
    std::vector<Bracket> work{whole}, out;
    while (!work.empty()) {
        Bracket nd = work.back();
        work.pop_back();
        int k = nd.va - nd.vb;
        if (k == 0) continue;
        if (k == 1 && (width == 0 || nd.b - nd.a <= width)) {
            out.push_back(nd);
            continue;
        }
        if (k == 1 && width != 0) {
            tighten(chain, nd);
            work.push_back(nd);
            continue;
        }
        Rational m = split_point(chain, nd.a, nd.b);
        int vm = chain.variations_at(m);
        work.push_back({nd.a, m, nd.va, vm});
        work.push_back({m, nd.b, vm, nd.vb});
    }
    return out;
}

}  // namespace

RootIntervals isolate_roots(const UniPoly& f, const Rational& width) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (!(width > 0)) throw std::invalid_argument("width must be positive");
    RootIntervals out;
    if (f.degree() == 0) return out;
    if (poly_gcd(f, f.derivative()).degree() > 0)
        throw std::invalid_argument("not squarefree");
    SturmChain chain(f);
    std::vector<Bracket> brackets = bracket_roots(chain, f, width);
    if (brackets.size() != std::size_t(f.degree()))
        throw std::invalid_argument("not real-rooted: " + std::to_string(brackets.size()) +
                                    " of " + std::to_string(f.degree()) + " roots real");
    std::sort(brackets.begin(), brackets.end(),
              [](const Bracket& x, const Bracket& y) { return x.a > y.a; });
    for (auto& nd : brackets) out.intervals.push_back({nd.a, nd.b});
    return out;
}

bool strictly_interlaces(const UniPoly& g, const UniPoly& f) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("zero polynomial");
    int df = f.degree(), dg = g.degree();
    if (!(dg <= df && df <= dg + 1)) throw std::invalid_argument("degree mismatch");
    if (dg == 0) {
        Rational a = g.coeff(0), b = f.coeff(1), c = f.coeff(0);
        return a > 0 && b + c > 0 && b >= 0 && c >= 0;
    }
    // strictness forbids any tie, so repeated or shared roots end it here
    if (poly_gcd(f, f.derivative()).degree() > 0) return false;
    if (poly_gcd(g, g.derivative()).degree() > 0) return false;
    if (poly_gcd(f, g).degree() > 0) return false;

    SturmChain cf(f), cg(g);
    struct Tagged {
        Bracket nd;
        int label;  // 0 = f, 1 = g
    };
    std::vector<Tagged> merged;
    std::vector<Bracket> bf = bracket_roots(cf, f, Rational(0));
    if (bf.size() != std::size_t(df)) return false;  // not real-rooted
    std::vector<Bracket> bg = bracket_roots(cg, g, Rational(0));
    if (bg.size() != std::size_t(dg)) return false;
    for (auto& nd : bf) merged.push_back({nd, 0});
    for (auto& nd : bg) merged.push_back({nd, 1});

    // refine until the brackets of the two families are pairwise disjoint;
    // all roots are distinct, so the gaps are positive and this terminates
    for (;;) {
        std::sort(merged.begin(), merged.end(), [](const Tagged& x, const Tagged& y) {
            return x.nd.a < y.nd.a || (x.nd.a == y.nd.a && x.nd.b < y.nd.b);
        });
        bool any = false;
        for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
            if (merged[i].nd.b > merged[i + 1].nd.a) {
                const SturmChain& ci = merged[i].label == 0 ? cf : cg;
                const SturmChain& cj = merged[i + 1].label == 0 ? cf : cg;
                tighten(ci, merged[i].nd);
                tighten(cj, merged[i + 1].nd);
                any = true;
            }
        }
        if (!any) break;
    }

    // descending root order must alternate starting from f
    if (merged.back().label != 0) return false;
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
        if (merged[i].label == merged[i + 1].label) return false;
    return true;
}

FiskReport verify_fisk(unsigned long max_n, unsigned jobs) {
    if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
    std::vector<UniPoly> gs(max_n + 2);
    for (unsigned long n = 0; n <= max_n + 1; ++n) gs[n] = row_poly(n);
    if (jobs == 0) jobs = default_jobs();

    std::function<FiskEntry(std::size_t)> one = [&](std::size_t n) {
        FiskEntry e;
        e.n = (unsigned long)n;
        e.real_rooted = is_real_rooted(gs[n]);
        e.next_ok = strictly_interlaces(gs[n], gs[n + 1]);
        e.skip_ok = n >= 1 ? strictly_interlaces(gs[n - 1], gs[n + 1]) : true;
        try {
            RootIntervals iso = isolate_roots(gs[n], make_rational(1, 4096));
            for (auto& iv : iso.intervals) {
                Rational w = iv.second - iv.first;
                if (w > e.iso_width) e.iso_width = w;
            }
        } catch (const std::invalid_argument&) {
            e.iso_width = -1;  // not isolatable; the verdict fields already say why
        }
        return e;
    };
    FiskReport rep;
    rep.entries = parallel_map<FiskEntry>(max_n + 1, jobs, one);
    rep.pass = true;
    for (auto& e : rep.entries) {
        if (e.real_rooted && e.next_ok && e.skip_ok) continue;
        rep.pass = false;
        rep.first_failure = "n=" + std::to_string(e.n) + ": " +
                            (!e.real_rooted      ? "row polynomial is not real-rooted"
                             : !e.next_ok        ? "no strict interlacing with the next row"
                                                 : "no strict interlacing across two rows");
        break;
    }
    return rep;
}

}  // namespace trinomia
