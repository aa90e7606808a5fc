#pragma once

#include "pwq/parampoly.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

namespace pwq {

enum class Side { Plus, Minus };

/// Basis element theta^k * cos(j theta) or theta^k * sin(j theta).
/// The constant 1 is (k=0, j=0, Cos); sin(0 theta) is not representable.
struct TrigKey {
    std::uint16_t theta_pow = 0;
    std::uint16_t harmonic = 0;
    enum Kind : std::uint8_t { Cos = 0, Sin = 1 } kind = Cos;

    friend bool operator<(const TrigKey& a, const TrigKey& b) {
        return std::tie(a.theta_pow, a.harmonic, a.kind) <
               std::tie(b.theta_pow, b.harmonic, b.kind);
    }
    friend bool operator==(const TrigKey& a, const TrigKey& b) {
        return std::tie(a.theta_pow, a.harmonic, a.kind) ==
               std::tie(b.theta_pow, b.harmonic, b.kind);
    }
};

/// Exact element of the ring spanned by theta^k cos(j theta), theta^k
/// sin(j theta) with ParamPoly coefficients. Products are re-expressed in
/// the basis eagerly; all values are immutable in spirit (operations return
/// new values).
class ThetaFourierPoly {
public:
    using Term = std::pair<TrigKey, ParamPoly>;

    ThetaFourierPoly() = default;

    static ThetaFourierPoly constant(ParamPoly c) {
        return single({0, 0, TrigKey::Cos}, std::move(c));
    }
    static ThetaFourierPoly constant(BigRational c) { return constant(ParamPoly(PiPoly(std::move(c)))); }
    static ThetaFourierPoly cos_term(int j, ParamPoly c = ParamPoly(1)) {
        return single({0, static_cast<std::uint16_t>(j), TrigKey::Cos}, std::move(c));
    }
    static ThetaFourierPoly sin_term(int j, ParamPoly c = ParamPoly(1)) {
        if (j == 0) return {};
        return single({0, static_cast<std::uint16_t>(j), TrigKey::Sin}, std::move(c));
    }
    static ThetaFourierPoly theta_pow(int k, ParamPoly c = ParamPoly(1)) {
        return single({static_cast<std::uint16_t>(k), 0, TrigKey::Cos}, std::move(c));
    }
    static ThetaFourierPoly single(TrigKey key, ParamPoly c) {
        ThetaFourierPoly p;
        if (!c.is_zero()) {
            if (key.kind == TrigKey::Sin && key.harmonic == 0)
                throw std::logic_error("ThetaFourierPoly: sin(0*theta) term");
            p.t_.push_back({key, std::move(c)});
        }
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    int max_theta_pow() const {
        int k = 0;
        for (auto& [key, c] : t_) k = std::max<int>(k, key.theta_pow);
        return k;
    }
    int max_harmonic() const {
        int j = 0;
        for (auto& [key, c] : t_) j = std::max<int>(j, key.harmonic);
        return j;
    }

    ParamPoly coeff(TrigKey key) const {
        auto it = std::lower_bound(t_.begin(), t_.end(), key,
                                   [](const Term& t, const TrigKey& k) { return t.first < k; });
        if (it != t_.end() && it->first == key) return it->second;
        return {};
    }

    ThetaFourierPoly& operator+=(const ThetaFourierPoly& o) { merge(o, false); return *this; }
    ThetaFourierPoly& operator-=(const ThetaFourierPoly& o) { merge(o, true); return *this; }
    friend ThetaFourierPoly operator+(ThetaFourierPoly a, const ThetaFourierPoly& b) { a += b; return a; }
    friend ThetaFourierPoly operator-(ThetaFourierPoly a, const ThetaFourierPoly& b) { a -= b; return a; }
    friend ThetaFourierPoly operator-(const ThetaFourierPoly& a) {
        ThetaFourierPoly r = a;
        for (auto& [k, c] : r.t_) c = -c;
        return r;
    }

    ThetaFourierPoly& operator*=(const ParamPoly& s) {
        if (s.is_zero()) { t_.clear(); return *this; }
        for (auto& [k, c] : t_) c *= s;
        prune();
        return *this;
    }
    friend ThetaFourierPoly operator*(ThetaFourierPoly a, const ParamPoly& s) { a *= s; return a; }
    ThetaFourierPoly& operator*=(const BigRational& s) { return (*this *= ParamPoly(PiPoly(s))); }
    friend ThetaFourierPoly operator*(ThetaFourierPoly a, const BigRational& s) { a *= s; return a; }

    /// Exact product via the product-to-sum identities.
    friend ThetaFourierPoly operator*(const ThetaFourierPoly& a, const ThetaFourierPoly& b);
    ThetaFourierPoly& operator*=(const ThetaFourierPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const ThetaFourierPoly& a, const ThetaFourierPoly& b) {
        return a.t_ == b.t_;
    }
    friend bool operator!=(const ThetaFourierPoly& a, const ThetaFourierPoly& b) { return !(a == b); }

    /// Antiderivative P with P(0) = 0, via iterated integration by parts.
    ThetaFourierPoly integral() const;

    /// d/dtheta, used as the independent check of integral().
    ThetaFourierPoly derivative() const;

    /// theta = +pi or -pi: theta^k -> (+-pi)^k, cos(j theta) -> (-1)^j,
    /// sin(j theta) -> 0.
    ParamPoly at_pi(Side side) const;

    /// theta -> theta + alpha given (cos alpha, sin alpha) as exact
    /// coefficients. Requires a pure harmonic polynomial (no theta powers).
    ThetaFourierPoly rotated(const ParamPoly& cos_a, const ParamPoly& sin_a) const;

    /// Structural degree caps for expansion order N (theta-power <= N+1,
    /// harmonic <= 3(N+2)); violation is an internal error.
    void check_caps(int N) const {
        if (max_theta_pow() > N + 1 || max_harmonic() > 3 * (N + 2))
            throw std::logic_error("ThetaFourierPoly: degree cap exceeded");
    }

    /// Floating-point evaluation, for test oracles only.
    double eval_numeric(double theta, const std::map<sym::Id, double>& assign) const {
        constexpr double kPi = 3.141592653589793238462643383279502884;
        double acc = 0;
        for (auto& [key, c] : t_) {
            double trig = key.kind == TrigKey::Cos ? std::cos(key.harmonic * theta)
                                                   : std::sin(key.harmonic * theta);
            acc += c.eval<double>(assign, kPi) * std::pow(theta, key.theta_pow) * trig;
        }
        return acc;
    }

    std::string str() const;

private:
    void merge(const ThetaFourierPoly& o, bool negate);
    void prune() {
        t_.erase(std::remove_if(t_.begin(), t_.end(),
                                [](const Term& t) { return t.second.is_zero(); }),
                 t_.end());
    }
    void add_term(TrigKey key, ParamPoly c);

    std::vector<Term> t_;
};

/// Polynomial in cos(theta), sin(theta) with ParamPoly coefficients,
/// used as the ingestion form (the polar data is naturally written there).
/// Key = (cos power, sin power).
using PowerTrigPoly = std::map<std::pair<int, int>, ParamPoly>;

/// Exact linearization of a power-basis polynomial into the Fourier basis.
ThetaFourierPoly from_power_basis(const PowerTrigPoly& p);

} // namespace pwq
