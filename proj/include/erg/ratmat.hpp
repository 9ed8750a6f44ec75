#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "erg/rational.hpp"

namespace erg {

/// Dense square matrix over an exact scalar (Rational or GaussRational),
/// just enough arithmetic for identity checks that must hold without float
/// noise.
template <class T>
class ExactMat {
public:
    ExactMat(std::size_t d, const T& fill = T{}) : d_(d), e_(d * d, fill) {
        if (d == 0) throw std::invalid_argument("ExactMat: dimension 0");
    }
    static ExactMat identity(std::size_t d) {
        ExactMat m(d);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t dim() const { return d_; }
    T& operator()(std::size_t i, std::size_t j) { return e_[i * d_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * d_ + j]; }

    friend ExactMat operator+(const ExactMat& a, const ExactMat& b) {
        ExactMat r(a.d_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend ExactMat operator-(const ExactMat& a, const ExactMat& b) {
        ExactMat r(a.d_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend ExactMat operator*(const ExactMat& a, const ExactMat& b) {
        ExactMat r(a.d_);
        for (std::size_t i = 0; i < a.d_; ++i)
            for (std::size_t k = 0; k < a.d_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < a.d_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend ExactMat operator*(const T& s, const ExactMat& a) {
        ExactMat r(a.d_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = s * a.e_[i];
        return r;
    }

    ExactMat pow(std::size_t n) const {
        ExactMat r = identity(d_);
        for (std::size_t i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!(x == T{})) return false;
        return true;
    }

    /// Max absolute row sum; exact for Rational, |re|+|im| based for
    /// GaussRational (norm-equivalent, zero iff the matrix is zero).
    Rational abs_row_sum_max() const {
        Rational best = 0;
        for (std::size_t i = 0; i < d_; ++i) {
            Rational row = 0;
            for (std::size_t j = 0; j < d_; ++j) {
                if constexpr (std::is_same_v<T, GaussRational>) row += (*this)(i, j).abs1();
                else {
                    const T& x = (*this)(i, j);
                    row += x < T(0) ? Rational(-x) : Rational(x);
                }
            }
            if (row > best) best = row;
        }
        return best;
    }

private:
    std::size_t d_;
    std::vector<T> e_;
};

using RatMat = ExactMat<Rational>;
using GaussMat = ExactMat<GaussRational>;

}  // namespace erg
