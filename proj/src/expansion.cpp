#include "pwq/expansion.hpp"

#include <future>
#include <stdexcept>

namespace pwq {

namespace {

ThetaFourierPoly tf_one() { return ThetaFourierPoly::constant(BigRational(1)); }

// homogeneity in the perturbation symbols only (tau/itau do not count)
bool perturbation_homogeneous(const ParamPoly& p, int degree) {
    for (auto& [m, c] : p.terms()) {
        int d = 0;
        for (auto& [id, e] : m.factors())
            if (sym::is_perturbation(id)) d += e;
        if (d != degree) return false;
    }
    return true;
}

// F_i numerators and the shared denominator D = 1 + r g0(theta, r) as
// r-polynomials; composition with phi0 and the 1/D^l powers happen on
// series, keeping every intermediate in the ring.
struct RationalData {
    RSeries D;        // 1 + r g0
    RSeries N0;       // r^2 f0
    RSeries dN0;      // numerator of dF0/dr (denominator power 2)
    RSeries ddN0;     // numerator of d2F0/dr2 (denominator power 3)
    RSeries dN1;      // numerator of dF1/dr (denominator power l1+1)
};

RSeries lift_trunc(const RSeries& a, int trunc) {
    RSeries r(trunc);
    for (int j = 0; j <= std::min(trunc, a.trunc()); ++j) r[j] = a[j];
    return r;
}

RationalData rational_data(const HalfSystemPolar& h, int N) {
    // generous truncation: every polynomial here has degree far below this
    const int t = 2 * (N + 6);
    RationalData rd;
    RSeries g0 = lift_trunc(h.g0, t);
    RSeries f0 = lift_trunc(h.f0, t);
    RSeries f1 = lift_trunc(h.f1, t);
    rd.D = RSeries::monomial(0, tf_one(), t) + g0.shifted(1);
    rd.N0 = f0.shifted(2);
    // d/dr (N/D^l) = (N' D - l N D') / D^(l+1)
    RSeries Dp = rd.D.derivative_r();
    rd.dN0 = rd.N0.derivative_r() * rd.D - rd.N0 * Dp;
    rd.ddN0 = rd.dN0.derivative_r() * rd.D - rd.dN0 * Dp * BigRational(2);
    rd.dN1 = f1.derivative_r() * rd.D - f1 * Dp * BigRational(h.l1);
    return rd;
}

RSeries compose_at(const RSeries& poly, const RSeries& phi) {
    return lift_trunc(poly, phi.trunc()).composed(phi);
}

} // namespace

HalfJet expand_order0(const HalfSystemPolar& h, int N) {
    if (N < 2) throw std::invalid_argument("expand_order0: N must be >= 2");
    HalfJet jet;
    jet.side = h.side;
    jet.order = 0;
    jet.N = N;

    RSeries phi(N);
    phi[1] = tf_one();
    RSeries dphi(N); // theta-derivatives xi'_{0,j}

    for (int j = 2; j <= N; ++j) {
        // (1 + phi g0(phi)) phi' - phi^2 f0(phi) = 0, coefficient of r^j;
        // the unknown xi'_{0,j} appears with factor 1
        RSeries G = compose_at(h.g0, phi) * phi;
        RSeries Fc = compose_at(h.f0, phi) * phi * phi;
        ThetaFourierPoly rhs = Fc[j];
        for (int m = 1; m <= j - 2; ++m)
            if (!G[m].is_zero() && !dphi[j - m].is_zero()) rhs -= G[m] * dphi[j - m];
        ThetaFourierPoly xi = rhs.integral();
        xi.check_caps(N);
        phi[j] = std::move(xi);
        dphi[j] = std::move(rhs);
    }

    // residual check: the implicit ODE must hold identically through r^N
    {
        RSeries G = compose_at(h.g0, phi) * phi;
        RSeries Fc = compose_at(h.f0, phi) * phi * phi;
        RSeries lhs = dphi + G * dphi - Fc;
        for (int j = 0; j <= N; ++j)
            if (!lhs[j].is_zero())
                throw std::logic_error("expand_order0: nonzero residual at r^" + std::to_string(j));
    }

    jet.xi.push_back(std::move(phi));
    return jet;
}

namespace {

/// Solves xi'_j = source_j + sum_{m>=1} mult_m xi_{j-m} with xi_j(0) = 0.
/// `mult` must have zero constant term.
RSeries solve_linear_ode(const RSeries& source, const RSeries& mult, int N) {
    if (!mult[0].is_zero())
        throw std::logic_error("solve_linear_ode: multiplier has an r^0 term");
    RSeries xi(N);
    for (int j = 1; j <= N; ++j) {
        ThetaFourierPoly rhs = source[j];
        for (int m = 1; m < j; ++m)
            if (!mult[m].is_zero() && !xi[j - m].is_zero()) rhs += mult[m] * xi[j - m];
        ThetaFourierPoly v = rhs.integral();
        v.check_caps(N);
        xi[j] = std::move(v);
    }
    return xi;
}

} // namespace

void expand_order1(const HalfSystemPolar& h, HalfJet& jet) {
    if (jet.order != 0 || jet.xi.size() != 1)
        throw std::invalid_argument("expand_order1: needs an order-0 jet");
    const int N = jet.N;
    const RSeries& phi0 = jet.xi[0];

    RationalData rd = rational_data(h, N);
    RSeries U = compose_at(rd.D, phi0).reciprocal();

    RSeries source = compose_at(h.f1, phi0) * U.pow(h.l1);
    RSeries A = compose_at(rd.dN0, phi0) * U.pow(2);

    jet.xi.push_back(solve_linear_ode(source, A, N));
    jet.order = 1;
}

void expand_order2(const HalfSystemPolar& h, HalfJet& jet) {
    if (jet.order != 1 || jet.xi.size() != 2)
        throw std::invalid_argument("expand_order2: needs an order-1 jet");
    const int N = jet.N;
    const RSeries& phi0 = jet.xi[0];
    const RSeries& phi1 = jet.xi[1];

    RationalData rd = rational_data(h, N);
    RSeries U = compose_at(rd.D, phi0).reciprocal();

    // F2(phi0) + dF1/dr(phi0) phi1 + (1/2) d2F0/dr2(phi0) phi1^2
    RSeries source = compose_at(h.f2, phi0) * U.pow(h.l2);
    source += (compose_at(rd.dN1, phi0) * U.pow(h.l1 + 1)) * phi1;
    RSeries half_dd = compose_at(rd.ddN0, phi0) * U.pow(3);
    half_dd *= BigRational(1, 2);
    source += half_dd * (phi1 * phi1);

    RSeries A = compose_at(rd.dN0, phi0) * U.pow(2);

    jet.xi.push_back(solve_linear_ode(source, A, N));
    jet.order = 2;
}

Jet expand(const PiecewiseCenter& sys, int order, int N) {
    if (order < 1 || order > 2)
        throw std::invalid_argument("expand: order must be 1 or 2");
    auto run_side = [order, N](const HalfSystemPolar& h) {
        HalfJet j = expand_order0(h, N);
        expand_order1(h, j);
        if (order >= 2) expand_order2(h, j);
        return j;
    };
    Jet jet;
    jet.order = order;
    jet.N = N;
    auto fut = std::async(std::launch::async, run_side, std::cref(sys.plus));
    jet.minus = run_side(sys.minus);
    jet.plus = fut.get();
    return jet;
}

DifferenceJet difference(const PiecewiseCenter& sys, const Jet& jets) {
    DifferenceJet dj;
    dj.system = sys.tag;
    dj.tau_str = sys.tau ? rational_str(*sys.tau) : "symbolic";
    dj.order = jets.order;
    dj.N = jets.N;
    dj.psi.assign(static_cast<std::size_t>(jets.order) + 1, {});
    for (int i = 0; i <= jets.order; ++i) {
        auto& row = dj.psi[static_cast<std::size_t>(i)];
        row.reserve(static_cast<std::size_t>(jets.N));
        for (int j = 1; j <= jets.N; ++j) {
            ParamPoly p = jets.plus.xi[static_cast<std::size_t>(i)][j].at_pi(Side::Plus) -
                          jets.minus.xi[static_cast<std::size_t>(i)][j].at_pi(Side::Minus);
            if (i == 0 && !p.is_zero())
                throw std::logic_error("difference: psi_{0," + std::to_string(j) +
                                       "} != 0; input is not a center or the expansion "
                                       "is inconsistent");
            if (i > 0 && !perturbation_homogeneous(p, i))
                throw std::logic_error("difference: psi_{" + std::to_string(i) + "," +
                                       std::to_string(j) + "} is not homogeneous of degree " +
                                       std::to_string(i));
            row.push_back(std::move(p));
        }
    }
    return dj;
}

DifferenceJet difference_jet(const PiecewiseCenter& sys, int order, int N) {
    return difference(sys, expand(sys, order, N));
}

TauPsi normalize_itau(const ParamPoly& p) {
    // p is polynomial in tau, itau and the perturbation symbols; clear itau
    // using itau = 1/(1+tau^2)
    int kmax = 0;
    for (auto& [m, c] : p.terms()) kmax = std::max(kmax, m.degree_in(sym::itau));
    ParamPoly t2p1 = ParamPoly::variable(sym::tau) * ParamPoly::variable(sym::tau) + ParamPoly(1);
    // numerator = sum of terms * (1+tau^2)^(kmax - k), itau removed
    std::vector<ParamPoly> pow(static_cast<std::size_t>(kmax) + 1);
    pow[0] = ParamPoly(1);
    for (int k = 1; k <= kmax; ++k) pow[static_cast<std::size_t>(k)] = pow[static_cast<std::size_t>(k - 1)] * t2p1;
    ParamPoly num;
    for (auto& [m, c] : p.terms()) {
        int k = m.degree_in(sym::itau);
        Monomial rest;
        for (auto& [id, e] : m.factors())
            if (id != sym::itau) rest = rest * Monomial(id, e);
        num += ParamPoly::term(rest, c) * pow[static_cast<std::size_t>(kmax - k)];
    }
    // reduce: divide by (1+tau^2) while possible
    int k = kmax;
    while (k > 0) {
        // long division in tau by (tau^2 + 1)
        ParamPoly rem = num, quot;
        while (true) {
            int d = 0;
            for (auto& [m, c] : rem.terms()) d = std::max(d, m.degree_in(sym::tau));
            if (d < 2) break;
            ParamPoly lead;
            for (auto& [m, c] : rem.terms()) {
                if (m.degree_in(sym::tau) != d) continue;
                Monomial rest;
                for (auto& [id, e] : m.factors())
                    if (id != sym::tau) rest = rest * Monomial(id, e);
                lead += ParamPoly::term(rest, c);
            }
            ParamPoly shift = lead * ParamPoly::term(Monomial(sym::tau, static_cast<std::uint16_t>(d - 2)),
                                                     PiPoly(BigRational(1)));
            quot += shift;
            rem -= shift * t2p1;
        }
        if (!rem.is_zero()) break;
        num = quot;
        --k;
    }
    return {num, k};
}

SymbolicTauJet difference_symbolic_tau(LoudName plus, LoudName minus, int N) {
    PiecewiseCenter sys = make_piecewise_symbolic_tau(plus, minus);
    DifferenceJet dj = difference_jet(sys, 1, N);
    SymbolicTauJet out;
    out.system = sys.tag;
    out.N = N;
    out.psi1.reserve(static_cast<std::size_t>(N));
    for (int j = 1; j <= N; ++j) out.psi1.push_back(normalize_itau(dj.at(1, j)));
    return out;
}

ParamPoly tau_psi_at(const TauPsi& tp, const BigRational& tau) {
    ParamPoly num = tp.num.substituted(sym::tau, ParamPoly(PiPoly(tau)));
    BigRational den = 1;
    BigRational t2p1 = 1 + tau * tau;
    for (int k = 0; k < tp.itau_power; ++k) den *= t2p1;
    num *= BigRational(1) / den;
    return num;
}

} // namespace pwq
