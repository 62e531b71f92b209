#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trinomia/unipoly.hpp"

namespace trinomia {

// Signed remainder chain f, f', -rem(f, f'), ... with every element rescaled
// to primitive integer coefficients. Positive rescaling preserves every sign
// the root-counting argument looks at; the last element is gcd(f, f') up to
// a positive constant.
class SturmChain {
  public:
    explicit SturmChain(const UniPoly& f);
    const std::vector<UniPoly>& polys() const { return polys_; }
    // sign changes down the chain at x, zeros skipped
    int variations_at(const Rational& x) const;
    // sign of f itself at x
    int sign_of_f(const Rational& x) const;

  private:
    std::vector<UniPoly> polys_;
    std::vector<std::vector<Integer>> z_;  // integer coefficient images, low-first
};

// sign of p(num/den) for den > 0, evaluated without leaving the integers
int sign_at(const std::vector<Integer>& p, const Integer& num, const Integer& den);

// Half-open brackets (lo, hi], one root each, pairwise disjoint, ordered by
// position descending (largest root first). Endpoints are never roots.
struct RootIntervals {
    std::vector<std::pair<Rational, Rational>> intervals;
};

// B with every real root of f inside (-B, B); f(B) and f(-B) are nonzero.
Rational cauchy_root_bound(const UniPoly& f);

// distinct real roots of f in (lo, hi]
unsigned long count_roots(const UniPoly& f, const Rational& lo, const Rational& hi);
unsigned long count_roots(const SturmChain& chain, const Rational& lo, const Rational& hi);

bool is_real_rooted(const UniPoly& f);

// f must be squarefree; every interval ends up with width <= width
RootIntervals isolate_roots(const UniPoly& f, const Rational& width);

// Strict interlacing of g below f: the roots in decreasing order alternate
// f, g, f, g, ... with every comparison strict. Requires
// deg g <= deg f <= deg g + 1. A constant g = a sits below f = bx + c
// exactly when a > 0, b + c > 0, b >= 0 and c >= 0; higher-degree f over a
// constant g is a degree mismatch.
bool strictly_interlaces(const UniPoly& g, const UniPoly& f);

struct FiskEntry {
    unsigned long n = 0;
    bool real_rooted = false;
    bool next_ok = false;      // row polynomial n against n+1
    bool skip_ok = false;      // row polynomial n-1 against n+1 (true at n = 0)
    Rational iso_width = 0;    // widest isolation bracket at 2^-12 refinement
};

struct FiskReport {
    bool pass = false;
    std::vector<FiskEntry> entries;
    std::string first_failure;  // empty when pass
};

// Runs the three per-n checks for every n <= max_n; jobs = 0 uses the
// configured default.
FiskReport verify_fisk(unsigned long max_n, unsigned jobs = 0);

}  // namespace trinomia
