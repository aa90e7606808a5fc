#pragma once

#include "pwq/trigpoly.hpp"

#include <vector>

namespace pwq {

/// Polynomial / truncated power series in r with ThetaFourierPoly
/// coefficients. Truncation is explicit: arithmetic keeps indices 0..trunc.
class RSeries {
public:
    RSeries() = default;
    explicit RSeries(int trunc) : trunc_(trunc), c_(static_cast<std::size_t>(trunc) + 1) {}

    static RSeries constant(ThetaFourierPoly v, int trunc) {
        RSeries s(trunc);
        s.c_[0] = std::move(v);
        return s;
    }
    static RSeries monomial(int power, ThetaFourierPoly v, int trunc) {
        RSeries s(trunc);
        if (power <= trunc) s.c_[static_cast<std::size_t>(power)] = std::move(v);
        return s;
    }

    int trunc() const { return trunc_; }
    const ThetaFourierPoly& operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
    ThetaFourierPoly& operator[](int j) { return c_[static_cast<std::size_t>(j)]; }

    bool is_zero() const {
        for (auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    /// Index of the lowest nonzero coefficient; trunc+1 when zero.
    int order() const {
        for (int j = 0; j <= trunc_; ++j)
            if (!c_[static_cast<std::size_t>(j)].is_zero()) return j;
        return trunc_ + 1;
    }

    RSeries& operator+=(const RSeries& o) {
        for (int j = 0; j <= std::min(trunc_, o.trunc_); ++j) c_[j] += o.c_[j];
        return *this;
    }
    RSeries& operator-=(const RSeries& o) {
        for (int j = 0; j <= std::min(trunc_, o.trunc_); ++j) c_[j] -= o.c_[j];
        return *this;
    }
    friend RSeries operator+(RSeries a, const RSeries& b) { a += b; return a; }
    friend RSeries operator-(RSeries a, const RSeries& b) { a -= b; return a; }
    friend RSeries operator-(const RSeries& a) {
        RSeries r(a.trunc_);
        for (int j = 0; j <= a.trunc_; ++j) r.c_[j] = -a.c_[j];
        return r;
    }

    RSeries& operator*=(const ThetaFourierPoly& s) {
        for (auto& c : c_) c = c * s;
        return *this;
    }
    RSeries& operator*=(const BigRational& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }
    friend RSeries operator*(RSeries a, const BigRational& s) { a *= s; return a; }
    friend RSeries operator*(RSeries a, const ThetaFourierPoly& s) { a *= s; return a; }

    friend RSeries operator*(const RSeries& a, const RSeries& b) {
        RSeries r(std::min(a.trunc_, b.trunc_));
        const int oa = a.order(), ob = b.order();
        for (int i = oa; i <= a.trunc_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = ob; i + j <= r.trunc_ && j <= b.trunc_; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    RSeries& operator*=(const RSeries& o) { *this = *this * o; return *this; }

    /// Multiplication by r^k (drops overflowing coefficients by truncation).
    RSeries shifted(int k) const {
        RSeries r(trunc_);
        for (int j = 0; j + k <= trunc_; ++j)
            if (!c_[j].is_zero()) r.c_[j + k] = c_[j];
        return r;
    }

    /// 1/this for a series with constant term 1.
    RSeries reciprocal() const {
        if (!(c_[0] == ThetaFourierPoly::constant(BigRational(1))))
            throw std::domain_error("RSeries::reciprocal: constant term must be 1");
        RSeries u(trunc_);
        u.c_[0] = ThetaFourierPoly::constant(BigRational(1));
        for (int n = 1; n <= trunc_; ++n) {
            ThetaFourierPoly acc;
            for (int m = 1; m <= n; ++m)
                if (!c_[m].is_zero() && !u.c_[n - m].is_zero()) acc += c_[m] * u.c_[n - m];
            u.c_[n] = -acc;
        }
        return u;
    }

    RSeries pow(int e) const {
        RSeries r = RSeries::constant(ThetaFourierPoly::constant(BigRational(1)), trunc_);
        RSeries base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return r;
    }

    /// d/dr of a polynomial in r.
    RSeries derivative_r() const {
        RSeries r(trunc_);
        for (int j = 1; j <= trunc_; ++j) r.c_[j - 1] = c_[j] * BigRational(j);
        return r;
    }

    /// Substitutes the series phi (with phi(0)=0) for r: Horner scheme.
    RSeries composed(const RSeries& phi) const {
        if (!phi.c_[0].is_zero())
            throw std::domain_error("RSeries::composed: inner series must vanish at 0");
        RSeries acc(phi.trunc_);
        for (int j = trunc_; j >= 0; --j) {
            acc = acc * phi;
            acc.c_[0] += c_[j];
        }
        return acc;
    }

    RSeries truncated(int t) const {
        RSeries r(t);
        for (int j = 0; j <= std::min(t, trunc_); ++j) r.c_[j] = c_[j];
        return r;
    }

    RSeries rotated(const ParamPoly& cos_a, const ParamPoly& sin_a) const {
        RSeries r(trunc_);
        for (int j = 0; j <= trunc_; ++j) r.c_[j] = c_[j].rotated(cos_a, sin_a);
        return r;
    }

private:
    int trunc_ = 0;
    std::vector<ThetaFourierPoly> c_;
};

} // namespace pwq
