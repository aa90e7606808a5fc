#pragma once

#include "pwq/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstddef>
#include <string>

namespace pwq {

/// Polynomial in pi over the exact rationals. pi is treated as a
/// transcendental indeterminate: a PiPoly is zero iff every coefficient is.
class PiPoly {
public:
    PiPoly() = default;
    PiPoly(BigRational c) {
        if (c != 0) c_.push_back(std::move(c));
    }
    PiPoly(long n) : PiPoly(BigRational(n)) {}

    static PiPoly pi_power(std::size_t k, BigRational coef = BigRational(1)) {
        PiPoly p;
        if (coef == 0) return p;
        p.c_.resize(k + 1);
        p.c_[k] = std::move(coef);
        return p;
    }
    static PiPoly pi() { return pi_power(1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree in pi; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const BigRational& coeff(std::size_t k) const {
        static const BigRational zero{0};
        return k < c_.size() ? c_[k] : zero;
    }

    PiPoly& operator+=(const PiPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    PiPoly& operator-=(const PiPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend PiPoly operator+(PiPoly a, const PiPoly& b) { a += b; return a; }
    friend PiPoly operator-(PiPoly a, const PiPoly& b) { a -= b; return a; }
    friend PiPoly operator-(const PiPoly& a) {
        PiPoly r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend PiPoly operator*(const PiPoly& a, const PiPoly& b) {
        PiPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.resize(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    PiPoly& operator*=(const PiPoly& o) { *this = *this * o; return *this; }
    PiPoly& operator*=(const BigRational& s) {
        if (s == 0) { c_.clear(); return *this; }
        for (auto& c : c_) c *= s;
        return *this;
    }
    friend PiPoly operator*(PiPoly a, const BigRational& s) { a *= s; return a; }
    friend PiPoly operator*(const BigRational& s, PiPoly a) { a *= s; return a; }

    friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PiPoly& a, const PiPoly& b) { return !(a == b); }
    friend bool operator<(const PiPoly& a, const PiPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t k = a.c_.size(); k-- > 0;)
            if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
        return false;
    }

    /// Evaluates with pi substituted by the given value (double, mpfr, ...).
    template <class T>
    T eval(const T& pi_value) const {
        T acc{0};
        for (std::size_t k = c_.size(); k-- > 0;) {
            acc *= pi_value;
            acc += static_cast<T>(c_[k]);
        }
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            if (!s.empty()) s += " + ";
            s += rational_str(c_[k]);
            if (k == 1) s += "*pi";
            else if (k > 1) s += "*pi^" + std::to_string(k);
        }
        return s;
    }

    std::size_t size() const { return c_.size(); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    boost::container::small_vector<BigRational, 2> c_;
};

/// Element of the fraction field of Q[pi], normalized so the denominator is
/// monic and gcd(num, den) = 1.
class PiFrac {
public:
    PiFrac() : num_(), den_(BigRational(1)) {}
    PiFrac(PiPoly n) : num_(std::move(n)), den_(BigRational(1)) {}
    PiFrac(BigRational c) : num_(std::move(c)), den_(BigRational(1)) {}
    PiFrac(PiPoly n, PiPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("PiFrac: zero denominator");
        normalize();
    }

    const PiPoly& num() const { return num_; }
    const PiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend PiFrac operator+(const PiFrac& a, const PiFrac& b) {
        return PiFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PiFrac operator-(const PiFrac& a, const PiFrac& b) {
        return PiFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend PiFrac operator*(const PiFrac& a, const PiFrac& b) {
        return PiFrac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend PiFrac operator/(const PiFrac& a, const PiFrac& b) {
        if (b.is_zero()) throw std::domain_error("PiFrac: division by zero");
        return PiFrac(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend PiFrac operator-(const PiFrac& a) { PiFrac r = a; r.num_ = -r.num_; return r; }
    PiFrac& operator+=(const PiFrac& o) { *this = *this + o; return *this; }
    PiFrac& operator-=(const PiFrac& o) { *this = *this - o; return *this; }
    PiFrac& operator*=(const PiFrac& o) { *this = *this * o; return *this; }
    PiFrac& operator/=(const PiFrac& o) { *this = *this / o; return *this; }

    friend bool operator==(const PiFrac& a, const PiFrac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const PiFrac& a, const PiFrac& b) { return !(a == b); }
    friend bool operator<(const PiFrac& a, const PiFrac& b) {
        if (a.den_ != b.den_) return a.den_ < b.den_;
        return a.num_ < b.num_;
    }

    template <class T>
    T eval(const T& pi_value) const {
        return num_.eval(pi_value) / den_.eval(pi_value);
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    static PiPoly make_monic(PiPoly p, BigRational& lead_out) {
        lead_out = p.coeff(static_cast<std::size_t>(p.degree()));
        PiPoly r;
        for (int k = 0; k <= p.degree(); ++k)
            r += PiPoly::pi_power(static_cast<std::size_t>(k), p.coeff(static_cast<std::size_t>(k)) / lead_out);
        return r;
    }

    static PiPoly poly_rem(PiPoly a, const PiPoly& b) {
        // b monic-ish not required; exact division over Q
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
            BigRational q = a.coeff(static_cast<std::size_t>(a.degree())) /
                            b.coeff(static_cast<std::size_t>(b.degree()));
            a -= PiPoly::pi_power(shift, q) * b;
        }
        return a;
    }

    static PiPoly poly_gcd(PiPoly a, PiPoly b) {
        while (!b.is_zero()) {
            PiPoly r = poly_rem(std::move(a), b);
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        BigRational lead;
        return make_monic(std::move(a), lead);
    }

    static PiPoly poly_div_exact(const PiPoly& a, const PiPoly& b) {
        PiPoly q, r = a;
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            BigRational c = r.coeff(static_cast<std::size_t>(r.degree())) /
                            b.coeff(static_cast<std::size_t>(b.degree()));
            PiPoly t = PiPoly::pi_power(shift, c);
            q += t;
            r -= t * b;
        }
        if (!r.is_zero()) throw std::logic_error("PiFrac: inexact polynomial division");
        return q;
    }

    void normalize() {
        if (num_.is_zero()) { den_ = PiPoly(BigRational(1)); return; }
        PiPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_div_exact(num_, g);
            den_ = poly_div_exact(den_, g);
        }
        BigRational lead;
        den_ = make_monic(std::move(den_), lead);
        num_ *= BigRational(1) / lead;
    }

    PiPoly num_;
    PiPoly den_;
};

} // namespace pwq
