#pragma once

#include <stdexcept>
#include <vector>

#include "trinomia/ring.hpp"

namespace trinomia {

// Truncated formal power series over ring R. The order is explicit and every
// coefficient k <= order() is exact; binary operations truncate to the
// smaller operand order.
template <class R>
class TruncSeries {
  public:
    using Traits = RingTraits<R>;

    TruncSeries() : c_(1, Traits::zero()) {}
    explicit TruncSeries(std::size_t order) : c_(order + 1, Traits::zero()) {}
    TruncSeries(std::vector<R> coeffs, std::size_t order) : c_(std::move(coeffs)) {
        c_.resize(order + 1, Traits::zero());
    }

    std::size_t order() const { return c_.size() - 1; }
    const R& operator[](std::size_t k) const { return c_.at(k); }
    R& at(std::size_t k) { return c_.at(k); }
    const std::vector<R>& coeffs() const { return c_; }

    TruncSeries truncated(std::size_t new_order) const {
        std::vector<R> v(c_.begin(), c_.begin() + std::min(new_order + 1, c_.size()));
        return TruncSeries(std::move(v), new_order);
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (std::size_t k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (std::size_t k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (Traits::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    // Multiply by x (drop the top coefficient).
    TruncSeries shifted_up() const {
        TruncSeries r(order());
        for (std::size_t k = 1; k <= order(); ++k) r.c_[k] = c_[k - 1];
        return r;
    }

    bool is_zero() const {
        for (auto& x : c_)
            if (!Traits::is_zero(x)) return false;
        return true;
    }

    bool agrees_with(const TruncSeries& o, std::size_t through) const {
        if (through > order() || through > o.order()) return false;
        for (std::size_t k = 0; k <= through; ++k)
            if (!(c_[k] == o.c_[k])) return false;
        return true;
    }

  private:
    std::vector<R> c_;
};

// 1/p for p with constant term 1; no division happens in the ring.
template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& p) {
    using Traits = RingTraits<R>;
    if (!(p[0] == Traits::one())) throw std::domain_error("constant term must be 1");
    std::size_t n = p.order();
    TruncSeries<R> s(n);
    s.at(0) = Traits::one();
    for (std::size_t k = 1; k <= n; ++k) {
        R acc = Traits::zero();
        for (std::size_t j = 1; j <= k; ++j) acc += p[j] * s[k - j];
        s.at(k) = Traits::zero() - acc;
    }
    return s;
}

// p^(-1/2) for p with constant term 1. From 2ps' + p's = 0:
//   s_n = -(1/(2n)) * sum_{j>=1} (2n - j) p_j s_{n-j},
// and the division by 2n must be exact in non-field rings.
template <class R>
TruncSeries<R> series_inv_sqrt(const TruncSeries<R>& p) {
    using Traits = RingTraits<R>;
    if (!(p[0] == Traits::one())) throw std::domain_error("constant term must be 1");
    std::size_t n = p.order();
    TruncSeries<R> s(n);
    s.at(0) = Traits::one();
    for (std::size_t k = 1; k <= n; ++k) {
        R acc = Traits::zero();
        for (std::size_t j = 1; j <= k; ++j) {
            if (Traits::is_zero(p[j])) continue;
            acc += p[j] * s[k - j] * Traits::from_long(long(2 * k - j));
        }
        s.at(k) = Traits::div_long(Traits::zero() - acc, long(2 * k));
    }
    return s;
}

// sqrt(p) = p * p^(-1/2); constant term of p must be 1.
template <class R>
TruncSeries<R> series_sqrt(const TruncSeries<R>& p) {
    return p * series_inv_sqrt(p);
}

// h(w) for w with zero constant term.
template <class R>
TruncSeries<R> series_compose(const TruncSeries<R>& h, const TruncSeries<R>& w) {
    using Traits = RingTraits<R>;
    if (!Traits::is_zero(w[0]))
        throw std::domain_error("composition needs zero constant term inside");
    std::size_t n = std::min(h.order(), w.order());
    TruncSeries<R> r(n);
    TruncSeries<R> wpow(n);
    wpow.at(0) = Traits::one();
    for (std::size_t k = 0; k <= n; ++k) {
        if (!Traits::is_zero(h[k]))
            for (std::size_t i = 0; i <= n; ++i) r.at(i) += h[k] * wpow[i];
        if (k < n) wpow = wpow * w.truncated(n);
    }
    return r;
}

}  // namespace trinomia
