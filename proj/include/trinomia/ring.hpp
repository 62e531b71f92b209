#pragma once

#include "trinomia/bipoly.hpp"
#include "trinomia/integer.hpp"

namespace trinomia {

// Uniform hooks so series and determinant code can run over Rational,
// Integer, or sparse bivariate polynomials. div() must be exact in the
// non-field rings and throws otherwise.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational from_long(long v) { return Rational(v); }
    static Rational div(const Rational& a, const Rational& b) {
        if (b == 0) throw std::domain_error("division by zero");
        return a / b;
    }
    static Rational div_long(const Rational& a, long v) { return div(a, Rational(v)); }
    static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct RingTraits<Integer> {
    static Integer zero() { return Integer(0); }
    static Integer one() { return Integer(1); }
    static bool is_zero(const Integer& x) { return x == 0; }
    static Integer from_long(long v) { return Integer(v); }
    static Integer div(const Integer& a, const Integer& b) { return div_exact(a, b); }
    static Integer div_long(const Integer& a, long v) { return div_exact(a, Integer(v)); }
    static std::string str(const Integer& x) { return x.get_str(); }
};

template <class Tag>
struct RingTraits<Poly2<Tag>> {
    using P = Poly2<Tag>;
    static P zero() { return P(); }
    static P one() { return P(1L); }
    static bool is_zero(const P& x) { return x.is_zero(); }
    static P from_long(long v) { return P(v); }
    static P div(const P& a, const P& b) { return div_exact(a, b); }
    static P div_long(const P& a, long v) {
        P r = a;
        r.scale_divexact(Integer(v));
        return r;
    }
    static std::string str(const P& x) { return x.str("b", "c"); }
};

}  // namespace trinomia
