#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "trinomia/integer.hpp"

namespace trinomia {

// Exponent pair for a sparse bivariate monomial.
using Exps = std::pair<std::uint32_t, std::uint32_t>;

// Graded-lex: ascending total degree, then ascending exponent of the first
// variable. Map iteration in this order is the serialization order.
struct GradedLex {
    bool operator()(const Exps& a, const Exps& b) const {
        std::uint64_t da = std::uint64_t(a.first) + a.second;
        std::uint64_t db = std::uint64_t(b.first) + b.second;
        if (da != db) return da < db;
        return a.first < b.first;
    }
};

// Sparse bivariate polynomial over Integer. Tag makes polynomials in (b,c)
// and in (u,v) distinct types so they cannot be mixed by accident.
template <class Tag>
class Poly2 {
  public:
    using TermMap = std::map<Exps, Integer, GradedLex>;

    Poly2() = default;
    explicit Poly2(const Integer& k) {
        if (k != 0) terms_[{0, 0}] = k;
    }
    explicit Poly2(long k) : Poly2(Integer(k)) {}

    static Poly2 monomial(std::uint32_t i, std::uint32_t j, const Integer& coeff) {
        Poly2 p;
        if (coeff != 0) p.terms_[{i, j}] = coeff;
        return p;
    }
    static Poly2 var1() { return monomial(1, 0, 1); }
    static Poly2 var2() { return monomial(0, 1, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Integer coeff(std::uint32_t i, std::uint32_t j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    // -1 for the zero polynomial, else max total degree.
    long total_degree() const {
        if (terms_.empty()) return -1;
        auto& k = terms_.rbegin()->first;
        return long(k.first) + long(k.second);
    }

    void add_term(std::uint32_t i, std::uint32_t j, const Integer& c) {
        if (c == 0) return;
        auto it = terms_.find({i, j});
        if (it == terms_.end()) {
            terms_.emplace(Exps{i, j}, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly2& operator+=(const Poly2& o) {
        for (auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    Poly2& operator-=(const Poly2& o) {
        for (auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    Poly2 operator-() const {
        Poly2 r;
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    Poly2& operator*=(const Poly2& o) { return *this = *this * o; }

    Poly2& scale(const Integer& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= k;
        return *this;
    }

    // Divide every coefficient by k; the division must be exact.
    Poly2& scale_divexact(const Integer& k) {
        for (auto& [e, c] : terms_) c = div_exact(c, k);
        return *this;
    }

    Poly2 pow(unsigned long e) const {
        Poly2 r(1L);
        Poly2 base = *this;
        while (e) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    Poly2 derivative_var1() const {
        Poly2 r;
        for (auto& [e, c] : terms_)
            if (e.first > 0) r.terms_.emplace(Exps{e.first - 1, e.second}, c * Integer(e.first));
        return r;
    }
    Poly2 derivative_var2() const {
        Poly2 r;
        for (auto& [e, c] : terms_)
            if (e.second > 0) r.terms_.emplace(Exps{e.first, e.second - 1}, c * Integer(e.second));
        return r;
    }

    Rational eval(const Rational& x, const Rational& y) const {
        Rational acc = 0;
        for (auto& [e, c] : terms_) acc += Rational(c) * pow_rat(x, e.first) * pow_rat(y, e.second);
        return acc;
    }

    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly2& o) const { return terms_ != o.terms_; }

    // "3*b^2*c + 1" style rendering; var names supplied by the tag's users.
    std::string str(const char* v1, const char* v2) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Integer& c = it->second;
            if (!out.empty()) out += c >= 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            Integer a = abs(c);
            std::string mono;
            auto app = [&mono](const char* v, std::uint32_t e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            app(v1, it->first.first);
            app(v2, it->first.second);
            if (mono.empty()) out += a.get_str();
            else if (a == 1) out += mono;
            else out += a.get_str() + "*" + mono;
        }
        return out;
    }

  private:
    TermMap terms_;
};

struct BcTag {};
struct UvTag {};

// Polynomials in (b, c).
using BiPoly = Poly2<BcTag>;
// Polynomials in (u, v) where u stands for b^2 - m*c and v for c.
using UVPoly = Poly2<UvTag>;

// Exact quotient a/d in the polynomial ring; throws if the division leaves a
// remainder. Greedy leading-term cancellation: when a = q*d exactly, the
// graded-lex leading term of the running remainder is always divisible by
// the leading term of d, so the loop terminates with remainder zero.
template <class Tag>
Poly2<Tag> div_exact(const Poly2<Tag>& a, const Poly2<Tag>& d) {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly2<Tag> q;
    Poly2<Tag> r = a;
    const auto& dl = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto& rl = *r.terms().rbegin();
        if (rl.first.first < dl.first.first || rl.first.second < dl.first.second)
            throw std::domain_error("non-exact polynomial division");
        Integer qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rl.second.get_mpz_t(), dl.second.get_mpz_t());
        if (rem != 0) throw std::domain_error("non-exact polynomial division");
        Poly2<Tag> t = Poly2<Tag>::monomial(rl.first.first - dl.first.first,
                                            rl.first.second - dl.first.second, qc);
        q += t;
        r -= t * d;
    }
    return q;
}

enum class Parity { Even, Odd };

struct ParityForm {
    Parity parity;
    UVPoly poly;
};

// Rewrites P(b,c) in the basis u = b^2 - m*c, v = c. Every b-exponent of P
// must have the same parity; odd parity factors one b out first, so
// P = b^(parity) * Q(b^2 - m*c, c) with Q returned.
inline ParityForm basis_change_uv(const BiPoly& P, unsigned m = 2) {
    bool saw_even = false, saw_odd = false;
    for (auto& [e, c] : P.terms()) ((e.first % 2 == 0) ? saw_even : saw_odd) = true;
    if (saw_even && saw_odd) throw std::domain_error("not parity-homogeneous");
    Parity parity = saw_odd ? Parity::Odd : Parity::Even;

    // (b^2)^p = (u + m*v)^p expanded one power at a time.
    UVPoly result;
    for (auto& [e, c] : P.terms()) {
        std::uint32_t p = e.first / 2;  // odd parity: the leftover single b is the factored-out one
        UVPoly term = UVPoly::monomial(0, e.second, c);
        UVPoly u_plus_mv = UVPoly::monomial(1, 0, 1) + UVPoly::monomial(0, 1, Integer(m));
        result += term * u_plus_mv.pow(p);
    }
    return {parity, result};
}

// Back-substitution b^2 -> u + m*v inverse check helper: rebuilds P from a
// ParityForm. Used by tests and by verification reports as the oracle.
inline BiPoly parity_form_to_bipoly(const ParityForm& f, unsigned m = 2) {
    BiPoly u_sub = BiPoly::monomial(2, 0, 1) - BiPoly::monomial(0, 1, Integer(m));  // b^2 - m*c
    BiPoly acc;
    for (auto& [e, c] : f.poly.terms()) {
        BiPoly t = u_sub.pow(e.first);
        t *= BiPoly::monomial(0, e.second, c);
        acc += t;
    }
    if (f.parity == Parity::Odd) acc *= BiPoly::var1();
    return acc;
}

template <class Tag>
bool poly_nonneg(const Poly2<Tag>& q) {
    for (auto& [e, c] : q.terms())
        if (c < 0) return false;
    return true;
}

inline bool uvpoly_nonneg(const UVPoly& q) { return poly_nonneg(q); }

inline Rational bipoly_eval(const BiPoly& P, const Rational& b0, const Rational& c0) {
    return P.eval(b0, c0);
}

}  // namespace trinomia
