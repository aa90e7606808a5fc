#pragma once

#include "pwq/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace pwq {

enum class LoudName; // systems.hpp

/// Bivariate polynomial over Q, dense-enough map representation. Only used
/// by the center decision, so it stays deliberately small.
class Poly2 {
public:
    Poly2() = default;
    static Poly2 term(int i, int j, BigRational c) {
        Poly2 p;
        if (c != 0) p.t_[{i, j}] = std::move(c);
        return p;
    }
    static Poly2 constant(BigRational c) { return term(0, 0, std::move(c)); }

    bool is_zero() const { return t_.empty(); }
    const std::map<std::pair<int, int>, BigRational>& terms() const { return t_; }

    Poly2& operator+=(const Poly2& o) {
        for (auto& [k, c] : o.t_) {
            auto& v = t_[k];
            v += c;
            if (v == 0) t_.erase(k);
        }
        return *this;
    }
    friend Poly2 operator+(Poly2 a, const Poly2& b) { a += b; return a; }
    friend Poly2 operator-(const Poly2& a) {
        Poly2 r = a;
        for (auto& [k, c] : r.t_) c = -c;
        return r;
    }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { a += -b; return a; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        for (auto& [ka, ca] : a.t_)
            for (auto& [kb, cb] : b.t_) {
                auto key = std::make_pair(ka.first + kb.first, ka.second + kb.second);
                auto& v = r.t_[key];
                v += ca * cb;
                if (v == 0) r.t_.erase(key);
            }
        return r;
    }

    Poly2 dx() const {
        Poly2 r;
        for (auto& [k, c] : t_)
            if (k.first > 0) r.t_[{k.first - 1, k.second}] = c * k.first;
        return r;
    }
    Poly2 dy() const {
        Poly2 r;
        for (auto& [k, c] : t_)
            if (k.second > 0) r.t_[{k.first, k.second - 1}] = c * k.second;
        return r;
    }

    /// Restriction to the line (v1 t, v2 t): univariate coefficients by
    /// total degree.
    std::vector<BigRational> on_line(const BigRational& v1, const BigRational& v2) const {
        int dmax = 0;
        for (auto& [k, c] : t_) dmax = std::max(dmax, k.first + k.second);
        std::vector<BigRational> out(static_cast<std::size_t>(dmax) + 1, BigRational(0));
        for (auto& [k, c] : t_) {
            BigRational v = c;
            for (int i = 0; i < k.first; ++i) v *= v1;
            for (int j = 0; j < k.second; ++j) v *= v2;
            out[static_cast<std::size_t>(k.first + k.second)] += v;
        }
        return out;
    }

private:
    std::map<std::pair<int, int>, BigRational> t_;
};

/// Rational first integral H = num/den with nabla(H) . Z == 0, verified
/// symbolically at construction.
struct FirstIntegral {
    Poly2 num;
    Poly2 den;
};

FirstIntegral first_integral(LoudName name);

/// Landing-point series sigma(lambda) = -lambda + sum_{k>=2} s_k lambda^k
/// solving H(L_v(lambda)) = H(L_v(sigma)).
struct SigmaSeries {
    BigRational v1, v2;               // line direction
    std::vector<BigRational> s;       // s[k] multiplies lambda^k; s[1] = -1
    int order = 0;

    double eval(double lambda) const {
        double acc = 0;
        for (std::size_t k = s.size(); k-- > 1;) acc = (acc + to_double(s[k])) * lambda;
        return acc;
    }
};

SigmaSeries sigma_series(const FirstIntegral& H, const BigRational& v1,
                         const BigRational& v2, int order);

enum class CenterVerdict { CenterCertifiedToOrder, NotCenter };

struct CenterCheckResult {
    CenterVerdict verdict;
    int order_checked = 0;
    int differing_order = -1; // first lambda power where the sigma series differ
};

/// Lemma-style decision for the mixed pair (S_i, S_j) with slope tau:
/// "not-center" verdicts are exact disproofs; "center" verdicts are
/// certified only to the requested jet order.
CenterCheckResult is_piecewise_center(LoudName i, LoudName j, const BigRational& tau,
                                      int order);

} // namespace pwq
