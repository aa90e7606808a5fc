#include "pwq/trigpoly.hpp"

namespace pwq {

namespace {

const BigRational kHalf{1, 2};

} // namespace

void ThetaFourierPoly::merge(const ThetaFourierPoly& o, bool negate) {
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    auto ia = t_.begin();
    auto ib = o.t_.begin();
    while (ia != t_.end() && ib != o.t_.end()) {
        if (ia->first < ib->first) out.push_back(std::move(*ia++));
        else if (ib->first < ia->first) {
            out.push_back({ib->first, negate ? -ib->second : ib->second});
            ++ib;
        } else {
            ParamPoly c = negate ? ia->second - ib->second : ia->second + ib->second;
            if (!c.is_zero()) out.push_back({ia->first, std::move(c)});
            ++ia; ++ib;
        }
    }
    for (; ia != t_.end(); ++ia) out.push_back(std::move(*ia));
    for (; ib != o.t_.end(); ++ib) out.push_back({ib->first, negate ? -ib->second : ib->second});
    t_ = std::move(out);
}

void ThetaFourierPoly::add_term(TrigKey key, ParamPoly c) {
    if (c.is_zero()) return;
    if (key.kind == TrigKey::Sin && key.harmonic == 0) return; // sin(0) == 0
    auto it = std::lower_bound(t_.begin(), t_.end(), key,
                               [](const Term& t, const TrigKey& k) { return t.first < k; });
    if (it != t_.end() && it->first == key) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    } else {
        t_.insert(it, {key, std::move(c)});
    }
}

ThetaFourierPoly operator*(const ThetaFourierPoly& a, const ThetaFourierPoly& b) {
    ThetaFourierPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<ThetaFourierPoly::Term> acc;
    acc.reserve(2 * a.t_.size() * b.t_.size());
    for (auto& [ka, ca] : a.t_) {
        for (auto& [kb, cb] : b.t_) {
            ParamPoly c = ca * cb;
            if (c.is_zero()) continue;
            const auto k = static_cast<std::uint16_t>(ka.theta_pow + kb.theta_pow);
            const int js = ka.harmonic + kb.harmonic;
            const int jd = static_cast<int>(ka.harmonic) - static_cast<int>(kb.harmonic);
            const std::uint16_t jda = static_cast<std::uint16_t>(jd < 0 ? -jd : jd);
            ParamPoly ch = c * kHalf;
            // cos a cos b = (cos(a-b)+cos(a+b))/2, sin a sin b = (cos(a-b)-cos(a+b))/2
            // sin a cos b = (sin(a-b)+sin(a+b))/2, cos a sin b = (sin(a+b)-sin(a-b))/2
            if (ka.kind == TrigKey::Cos && kb.kind == TrigKey::Cos) {
                acc.push_back({{k, jda, TrigKey::Cos}, ch});
                acc.push_back({{k, static_cast<std::uint16_t>(js), TrigKey::Cos}, std::move(ch)});
            } else if (ka.kind == TrigKey::Sin && kb.kind == TrigKey::Sin) {
                acc.push_back({{k, jda, TrigKey::Cos}, ch});
                acc.push_back({{k, static_cast<std::uint16_t>(js), TrigKey::Cos}, -ch});
            } else if (ka.kind == TrigKey::Sin && kb.kind == TrigKey::Cos) {
                if (jd != 0) acc.push_back({{k, jda, TrigKey::Sin}, jd > 0 ? ch : -ch});
                acc.push_back({{k, static_cast<std::uint16_t>(js), TrigKey::Sin}, std::move(ch)});
            } else { // cos * sin
                if (jd != 0) acc.push_back({{k, jda, TrigKey::Sin}, jd > 0 ? -ch : ch});
                acc.push_back({{k, static_cast<std::uint16_t>(js), TrigKey::Sin}, std::move(ch)});
            }
        }
    }
    std::sort(acc.begin(), acc.end(),
              [](const ThetaFourierPoly::Term& x, const ThetaFourierPoly::Term& y) {
                  return x.first < y.first;
              });
    for (auto& t : acc) {
        if (t.first.kind == TrigKey::Sin && t.first.harmonic == 0) continue;
        if (!r.t_.empty() && r.t_.back().first == t.first) r.t_.back().second += t.second;
        else r.t_.push_back(std::move(t));
    }
    r.prune();
    return r;
}

ThetaFourierPoly ThetaFourierPoly::integral() const {
    ThetaFourierPoly out;
    for (auto& [key, c] : t_) {
        if (key.harmonic == 0) {
            // pure power: theta^k -> theta^(k+1)/(k+1)
            out.add_term({static_cast<std::uint16_t>(key.theta_pow + 1), 0, TrigKey::Cos},
                         c * BigRational(1, key.theta_pow + 1));
            continue;
        }
        // iterated integration by parts, alternating cos <-> sin
        const BigRational j{key.harmonic};
        int k = key.theta_pow;
        TrigKey::Kind kind = key.kind;
        ParamPoly cur = c;
        while (true) {
            if (kind == TrigKey::Cos) {
                // int theta^k cos = theta^k sin/j - (k/j) int theta^(k-1) sin
                out.add_term({static_cast<std::uint16_t>(k), key.harmonic, TrigKey::Sin},
                             cur * (BigRational(1) / j));
                if (k == 0) break;
                cur *= -(BigRational(k) / j);
                kind = TrigKey::Sin;
                --k;
            } else {
                // int theta^k sin = -theta^k cos/j + (k/j) int theta^(k-1) cos
                out.add_term({static_cast<std::uint16_t>(k), key.harmonic, TrigKey::Cos},
                             cur * (-(BigRational(1) / j)));
                if (k == 0) break;
                cur *= BigRational(k) / j;
                kind = TrigKey::Cos;
                --k;
            }
        }
    }
    // subtract value at 0 so the antiderivative vanishes there
    ParamPoly at0;
    for (auto& [key, c] : out.t_)
        if (key.theta_pow == 0 && key.kind == TrigKey::Cos) at0 += c;
    out.add_term({0, 0, TrigKey::Cos}, -at0);
    return out;
}

ThetaFourierPoly ThetaFourierPoly::derivative() const {
    ThetaFourierPoly out;
    for (auto& [key, c] : t_) {
        if (key.theta_pow > 0)
            out.add_term({static_cast<std::uint16_t>(key.theta_pow - 1), key.harmonic, key.kind},
                         c * BigRational(key.theta_pow));
        if (key.harmonic > 0) {
            if (key.kind == TrigKey::Cos)
                out.add_term({key.theta_pow, key.harmonic, TrigKey::Sin},
                             c * (-BigRational(key.harmonic)));
            else
                out.add_term({key.theta_pow, key.harmonic, TrigKey::Cos},
                             c * BigRational(key.harmonic));
        }
    }
    return out;
}

ParamPoly ThetaFourierPoly::at_pi(Side side) const {
    ParamPoly out;
    for (auto& [key, c] : t_) {
        if (key.kind == TrigKey::Sin) continue;
        BigRational sign{(key.harmonic % 2 == 0) ? 1 : -1};
        if (side == Side::Minus && key.theta_pow % 2 == 1) sign = -sign;
        ParamPoly factor(PiPoly::pi_power(key.theta_pow, sign));
        out += c * factor;
    }
    return out;
}

ThetaFourierPoly ThetaFourierPoly::rotated(const ParamPoly& cos_a, const ParamPoly& sin_a) const {
    if (max_theta_pow() > 0)
        throw std::domain_error(
            "ThetaFourierPoly::rotated: theta powers present; rotation is only "
            "defined before integration introduces them");
    const int jmax = max_harmonic();
    // cos(j alpha), sin(j alpha) by angle-addition recurrence
    std::vector<ParamPoly> C(jmax + 1), S(jmax + 1);
    C[0] = ParamPoly(1);
    S[0] = ParamPoly();
    for (int j = 1; j <= jmax; ++j) {
        C[j] = C[j - 1] * cos_a - S[j - 1] * sin_a;
        S[j] = S[j - 1] * cos_a + C[j - 1] * sin_a;
    }
    ThetaFourierPoly out;
    for (auto& [key, c] : t_) {
        const int j = key.harmonic;
        if (j == 0) { out.add_term(key, c); continue; }
        if (key.kind == TrigKey::Cos) {
            // cos(j theta + j alpha)
            out.add_term({0, key.harmonic, TrigKey::Cos}, c * C[j]);
            out.add_term({0, key.harmonic, TrigKey::Sin}, -(c * S[j]));
        } else {
            // sin(j theta + j alpha)
            out.add_term({0, key.harmonic, TrigKey::Cos}, c * S[j]);
            out.add_term({0, key.harmonic, TrigKey::Sin}, c * C[j]);
        }
    }
    return out;
}

ThetaFourierPoly from_power_basis(const PowerTrigPoly& p) {
    // cache pure powers cos^m, sin^n in the Fourier basis
    int mmax = 0, nmax = 0;
    for (auto& [mn, c] : p) {
        mmax = std::max(mmax, mn.first);
        nmax = std::max(nmax, mn.second);
    }
    std::vector<ThetaFourierPoly> cp(mmax + 1), sp(nmax + 1);
    cp[0] = ThetaFourierPoly::constant(BigRational(1));
    sp[0] = cp[0];
    for (int m = 1; m <= mmax; ++m) cp[m] = cp[m - 1] * ThetaFourierPoly::cos_term(1);
    for (int n = 1; n <= nmax; ++n) sp[n] = sp[n - 1] * ThetaFourierPoly::sin_term(1);
    ThetaFourierPoly out;
    for (auto& [mn, c] : p) {
        if (c.is_zero()) continue;
        out += (cp[mn.first] * sp[mn.second]) * c;
    }
    return out;
}

std::string ThetaFourierPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (auto& [key, c] : t_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        if (key.theta_pow > 0) s += "*th^" + std::to_string(key.theta_pow);
        if (key.harmonic > 0)
            s += (key.kind == TrigKey::Cos ? "*cos(" : "*sin(") +
                 std::to_string(key.harmonic) + "th)";
    }
    return s;
}

} // namespace pwq
