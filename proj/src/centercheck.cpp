#include "pwq/centercheck.hpp"

#include "pwq/systems.hpp"

#include <stdexcept>

namespace pwq {

namespace {

// truncated power series over Q, dense
using QSeries = std::vector<BigRational>;

QSeries q_trunc(QSeries a, std::size_t n) {
    a.resize(n + 1, BigRational(0));
    return a;
}

QSeries q_mul(const QSeries& a, const QSeries& b, std::size_t n) {
    QSeries r(n + 1, BigRational(0));
    for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= n; ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

QSeries q_add(QSeries a, const QSeries& b) {
    if (b.size() > a.size()) a.resize(b.size(), BigRational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

// 1/d for d with d[0] != 0
QSeries q_inv(const QSeries& d, std::size_t n) {
    if (d.empty() || d[0] == 0) throw std::domain_error("q_inv: zero constant term");
    QSeries r(n + 1, BigRational(0));
    r[0] = BigRational(1) / d[0];
    for (std::size_t k = 1; k <= n; ++k) {
        BigRational acc(0);
        for (std::size_t m = 1; m <= k && m < d.size(); ++m) acc += d[m] * r[k - m];
        r[k] = -acc / d[0];
    }
    return r;
}

// f(g) for g with g[0] == 0, Horner
QSeries q_compose(const QSeries& f, const QSeries& g, std::size_t n) {
    QSeries acc(n + 1, BigRational(0));
    for (std::size_t j = f.size(); j-- > 0;) {
        acc = q_mul(acc, g, n);
        acc[0] += f[j];
    }
    return acc;
}

Poly2 field_p(const PlanarQuadratic& v) {
    Poly2 p = Poly2::term(0, 1, BigRational(-1));
    p += Poly2::term(2, 0, v.p20);
    p += Poly2::term(1, 1, v.p11);
    p += Poly2::term(0, 2, v.p02);
    return p;
}

Poly2 field_q(const PlanarQuadratic& v) {
    Poly2 q = Poly2::term(1, 0, BigRational(1));
    q += Poly2::term(2, 0, v.q20);
    q += Poly2::term(1, 1, v.q11);
    q += Poly2::term(0, 2, v.q02);
    return q;
}

} // namespace

FirstIntegral first_integral(LoudName name) {
    FirstIntegral H;
    auto xy2 = Poly2::term(2, 0, BigRational(1)) + Poly2::term(0, 2, BigRational(1));
    switch (name) {
        case LoudName::S1:
            H.num = xy2;
            H.den = Poly2::constant(BigRational(1)) + Poly2::term(0, 1, BigRational(2));
            break;
        case LoudName::S2: {
            H.num = xy2;
            auto d = Poly2::constant(BigRational(1)) + Poly2::term(0, 1, BigRational(1));
            H.den = d * d;
            break;
        }
        case LoudName::S3:
            H.num = Poly2::term(2, 0, BigRational(9)) + Poly2::term(0, 2, BigRational(9)) +
                    Poly2::term(2, 1, BigRational(-24)) + Poly2::term(4, 0, BigRational(16));
            H.den = Poly2::term(0, 1, BigRational(16)) + Poly2::constant(BigRational(-3));
            break;
        case LoudName::S4: {
            H.num = Poly2::term(2, 0, BigRational(9)) + Poly2::term(0, 2, BigRational(9)) +
                    Poly2::term(0, 3, BigRational(24)) + Poly2::term(0, 4, BigRational(16));
            auto d = Poly2::constant(BigRational(3)) + Poly2::term(0, 1, BigRational(8));
            H.den = d * d * d * d;
            break;
        }
        case LoudName::LinearCenter:
            H.num = xy2;
            H.den = Poly2::constant(BigRational(1));
            break;
        default:
            throw std::invalid_argument("first_integral: unknown system");
    }
    // defining property: (grad num . Z) den - num (grad den . Z) == 0
    PlanarQuadratic z = builtin_system(name);
    Poly2 P = field_p(z), Q = field_q(z);
    Poly2 lie = (H.num.dx() * P + H.num.dy() * Q) * H.den -
                H.num * (H.den.dx() * P + H.den.dy() * Q);
    if (!lie.is_zero())
        throw std::logic_error("first_integral: nabla(H).Z != 0 for " + system_name_str(name));
    return H;
}

SigmaSeries sigma_series(const FirstIntegral& H, const BigRational& v1,
                         const BigRational& v2, int order) {
    if (v1 == 0 && v2 == 0) throw std::invalid_argument("sigma_series: zero direction");
    if (order < 2) throw std::invalid_argument("sigma_series: order must be >= 2");
    const std::size_t n = static_cast<std::size_t>(order) + 2;

    QSeries num = H.num.on_line(v1, v2);
    QSeries den = H.den.on_line(v1, v2);
    if (den.empty() || den[0] == 0)
        throw std::domain_error("sigma_series: integral denominator vanishes at the origin");
    // G(lambda) = H(L_v(lambda)) as a series; G = g2 lambda^2 + ...
    QSeries G = q_mul(q_trunc(num, n), q_inv(q_trunc(den, n), n), n);
    if (G.size() < 3 || G[0] != 0 || G[1] != 0 || G[2] == 0)
        throw std::domain_error("sigma_series: degenerate level structure at the origin");
    const BigRational g2 = G[2];

    SigmaSeries out;
    out.v1 = v1;
    out.v2 = v2;
    out.order = order;
    out.s.assign(static_cast<std::size_t>(order) + 1, BigRational(0));
    out.s[1] = BigRational(-1);

    // undetermined coefficients: the lambda^(k+1) defect of G(sigma) - G
    // is linear in s_k with factor -2 g2
    for (int k = 2; k <= order; ++k) {
        QSeries sig(out.s.begin(), out.s.begin() + k); // s_k still zero
        QSeries E = q_compose(G, q_trunc(sig, n), n);
        const std::size_t idx = static_cast<std::size_t>(k) + 1;
        BigRational defect = E[idx] - (idx < G.size() ? G[idx] : BigRational(0));
        out.s[static_cast<std::size_t>(k)] = defect / (2 * g2);
    }
    return out;
}

CenterCheckResult is_piecewise_center(LoudName i, LoudName j, const BigRational& tau,
                                      int order) {
    CenterCheckResult r;
    r.order_checked = order;
    if (tau == 0 || i == j) {
        // x-axis symmetric case: sigma = -lambda for every Loud system
        r.verdict = CenterVerdict::CenterCertifiedToOrder;
        return r;
    }
    const BigRational v1 = 1 - tau * tau;
    const BigRational v2 = 2 * tau;
    SigmaSeries si = sigma_series(first_integral(i), v1, v2, order);
    SigmaSeries sj = sigma_series(first_integral(j), v1, v2, order);
    for (int k = 2; k <= order; ++k) {
        if (si.s[static_cast<std::size_t>(k)] != sj.s[static_cast<std::size_t>(k)]) {
            r.verdict = CenterVerdict::NotCenter;
            r.differing_order = k;
            return r;
        }
    }
    r.verdict = CenterVerdict::CenterCertifiedToOrder;
    return r;
}

} // namespace pwq
