#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trinomia/ring.hpp"

namespace trinomia {

template <class R>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, RingTraits<R>::zero()) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<R>::one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    R& operator()(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const R& operator()(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (RingTraits<R>::is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
        Mat r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j) - b(i, j);
        return r;
    }

    bool is_zero() const {
        for (auto& x : a_)
            if (!RingTraits<R>::is_zero(x)) return false;
        return true;
    }
    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
        Mat s(ri.size(), ci.size());
        for (std::size_t i = 0; i < ri.size(); ++i)
            for (std::size_t j = 0; j < ci.size(); ++j) s(i, j) = (*this)(ri[i], ci[j]);
        return s;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> a_;
};

// Fraction-free determinant. Every division is by a previous pivot and is
// exact (intermediate entries are minors of the input up to sign), so the
// routine works over Integer and polynomial rings, not just fields.
template <class R>
R bareiss_det(Mat<R> m) {
    using Traits = RingTraits<R>;
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Traits::one();
    R prev = Traits::one();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (Traits::is_zero(m(k, k))) {
            std::size_t p = k + 1;
            while (p < n && Traits::is_zero(m(p, k))) ++p;
            if (p == n) return Traits::zero();
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = Traits::div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = Traits::zero();
        }
        prev = m(k, k);
    }
    R det = m(n - 1, n - 1);
    return negate ? Traits::zero() - det : det;
}

// All strictly increasing index k-subsets of {0..n-1}, in lexicographic
// order; visit returns false to stop early. Returns false if stopped.
template <class Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) return visit(idx);
    while (true) {
        if (!visit(idx)) return false;
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return true;
        }
    }
}

}  // namespace trinomia
