#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "trinomia/integer.hpp"

namespace trinomia {

// Dense univariate polynomial over the rationals, lowest degree first.
// degree() of the zero polynomial is -1 (stands for "-infinity").
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { prune(); }
    explicit UniPoly(const Rational& k) : c_{k} { prune(); }

    static UniPoly from_integers(const std::vector<Integer>& v) {
        std::vector<Rational> c;
        c.reserve(v.size());
        for (auto& z : v) c.emplace_back(z);
        return UniPoly(std::move(c));
    }
    static UniPoly x() { return UniPoly(std::vector<Rational>{0, 1}); }

    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational& leading() const {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    Rational eval(const Rational& x0) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(long(i));
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return UniPoly(std::move(r));
    }
    UniPoly operator-() const {
        std::vector<Rational> r(c_);
        for (auto& q : r) q = -q;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly scaled(const Rational& k) const {
        std::vector<Rational> r(c_);
        for (auto& q : r) q *= k;
        return UniPoly(std::move(r));
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    // Euclidean remainder of *this by d (field division over Q).
    UniPoly rem(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        UniPoly r = *this;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational q = r.leading() / d.leading();
            int shift = r.degree() - d.degree();
            std::vector<Rational> t(std::size_t(shift) + d.c_.size(), Rational(0));
            for (std::size_t i = 0; i < d.c_.size(); ++i) t[i + shift] = d.c_[i] * q;
            r = r - UniPoly(std::move(t));
        }
        return r;
    }

    UniPoly divided_by(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        UniPoly r = *this;
        std::vector<Rational> qc(r.degree() >= d.degree() ? r.degree() - d.degree() + 1 : 0,
                                 Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational q = r.leading() / d.leading();
            int shift = r.degree() - d.degree();
            qc[shift] = q;
            std::vector<Rational> t(std::size_t(shift) + d.c_.size(), Rational(0));
            for (std::size_t i = 0; i < d.c_.size(); ++i) t[i + shift] = d.c_[i] * q;
            r = r - UniPoly(std::move(t));
        }
        if (!r.is_zero()) throw std::domain_error("non-exact polynomial division");
        return UniPoly(std::move(qc));
    }

    // Positive-rational rescale to coprime integer coefficients. Preserves
    // signs everywhere, which is what the root machinery cares about.
    UniPoly primitive() const {
        if (c_.empty()) return UniPoly();
        Integer den_lcm = 1;
        for (auto& q : c_) den_lcm = lcm(den_lcm, Integer(q.get_den()));
        Integer num_gcd = 0;
        for (auto& q : c_) num_gcd = gcd(num_gcd, Integer(q.get_num() * den_lcm / q.get_den()));
        Rational scale = make_rational(den_lcm, num_gcd);
        return scaled(scale);
    }

    std::string str(const char* var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t idx = c_.size(); idx-- > 0;) {
            const Rational& q = c_[idx];
            if (q == 0) continue;
            if (!out.empty()) out += q > 0 ? " + " : " - ";
            else if (q < 0) out += "-";
            Rational a = abs(q);
            std::string mono;
            if (idx > 0) {
                mono = var;
                if (idx > 1) mono += "^" + std::to_string(idx);
            }
            if (mono.empty()) out += a.get_str();
            else if (a == 1) out += mono;
            else out += a.get_str() + "*" + mono;
        }
        return out.empty() ? "0" : out;
    }

  private:
    void prune() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.rem(b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.primitive();
}

}  // namespace trinomia
