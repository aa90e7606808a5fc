#include "pwq/systems.hpp"

#include "pwq/centercheck.hpp"

#include <stdexcept>

namespace pwq {

PlanarQuadratic builtin_system(LoudName name) {
    switch (name) {
        case LoudName::S1: return {BigRational(1), BigRational(0), BigRational(-1),
                                   BigRational(0), BigRational(2), BigRational(0)};
        case LoudName::S2: return {BigRational(1), BigRational(0), BigRational(0),
                                   BigRational(0), BigRational(1), BigRational(0)};
        case LoudName::S3: return {BigRational(-4, 3), BigRational(0), BigRational(0),
                                   BigRational(0), BigRational(-16, 3), BigRational(0)};
        case LoudName::S4: return {BigRational(16, 3), BigRational(0), BigRational(-4, 3),
                                   BigRational(0), BigRational(8, 3), BigRational(0)};
        case LoudName::LinearCenter: return {BigRational(0), BigRational(0), BigRational(0),
                                             BigRational(0), BigRational(0), BigRational(0)};
    }
    throw std::invalid_argument("builtin_system: unknown name");
}

LoudName parse_system_name(const std::string& s) {
    if (s == "s1" || s == "S1") return LoudName::S1;
    if (s == "s2" || s == "S2") return LoudName::S2;
    if (s == "s3" || s == "S3") return LoudName::S3;
    if (s == "s4" || s == "S4") return LoudName::S4;
    if (s == "linear") return LoudName::LinearCenter;
    throw std::invalid_argument("unknown system name '" + s + "'");
}

std::string system_name_str(LoudName n) {
    switch (n) {
        case LoudName::S1: return "s1";
        case LoudName::S2: return "s2";
        case LoudName::S3: return "s3";
        case LoudName::S4: return "s4";
        case LoudName::LinearCenter: return "linear";
    }
    return "?";
}

PerturbationTemplate perturbation_template(Side side, int degree) {
    if (degree != 2)
        throw std::invalid_argument("perturbation_template: only degree 2 is supported");
    const char sc = side == Side::Plus ? '+' : '-';
    auto var = [&](char kind, int e1, int e2) {
        return ParamPoly::variable(sym::coeff(kind, sc, e1, e2));
    };
    PerturbationTemplate t;
    {
        PowerTrigPoly p;
        p[{1, 0}] = var('a', 1, 0);
        p[{0, 1}] = var('a', 0, 1);
        t.P11 = from_power_basis(p);
    }
    {
        PowerTrigPoly p;
        p[{2, 0}] = var('a', 2, 0);
        p[{1, 1}] = var('a', 1, 1);
        p[{0, 2}] = var('a', 0, 2);
        t.P12 = from_power_basis(p);
    }
    {
        PowerTrigPoly p;
        p[{1, 0}] = var('b', 1, 0);
        p[{0, 1}] = var('b', 0, 1);
        t.Q11 = from_power_basis(p);
    }
    {
        PowerTrigPoly p;
        p[{2, 0}] = var('b', 2, 0);
        p[{1, 1}] = var('b', 1, 1);
        p[{0, 2}] = var('b', 0, 2);
        t.Q12 = from_power_basis(p);
    }
    return t;
}

HalfSystemPolar to_polar(const PlanarQuadratic& v, Side side) {
    auto c1 = ThetaFourierPoly::cos_term(1);
    auto s1 = ThetaFourierPoly::sin_term(1);

    // quadratic parts of the unperturbed field on the unit circle
    ThetaFourierPoly p2, q2;
    {
        PowerTrigPoly p;
        p[{2, 0}] = ParamPoly(PiPoly(v.p20));
        p[{1, 1}] = ParamPoly(PiPoly(v.p11));
        p[{0, 2}] = ParamPoly(PiPoly(v.p02));
        p2 = from_power_basis(p);
        PowerTrigPoly q;
        q[{2, 0}] = ParamPoly(PiPoly(v.q20));
        q[{1, 1}] = ParamPoly(PiPoly(v.q11));
        q[{0, 2}] = ParamPoly(PiPoly(v.q02));
        q2 = from_power_basis(q);
    }
    // radial and angular projections: r' = r^2 u + eps (r A1 + r^2 A2),
    // theta' = 1 + r v + eps (B1 + r B2)
    ThetaFourierPoly u = c1 * p2 + s1 * q2;
    ThetaFourierPoly w = c1 * q2 - s1 * p2;

    PerturbationTemplate pt = perturbation_template(side);
    ThetaFourierPoly A1 = c1 * pt.P11 + s1 * pt.Q11;
    ThetaFourierPoly A2 = c1 * pt.P12 + s1 * pt.Q12;
    ThetaFourierPoly B1 = c1 * pt.Q11 - s1 * pt.P11;
    ThetaFourierPoly B2 = c1 * pt.Q12 - s1 * pt.P12;

    HalfSystemPolar h;
    h.side = side;
    h.f0 = RSeries::constant(u, 0);
    h.g0 = RSeries::constant(w, 0);
    h.l1 = 2;
    h.l2 = 3;

    // f1 = (r A1 + r^2 A2)(1 + r w) - r^2 u (B1 + r B2), degree 3
    RSeries num1(3);
    num1[1] = A1;
    num1[2] = A2;
    RSeries onePlusRw(3);
    onePlusRw[0] = ThetaFourierPoly::constant(BigRational(1));
    onePlusRw[1] = w;
    RSeries uB(3);
    uB[2] = u * B1;
    uB[3] = u * B2;
    h.f1 = num1 * onePlusRw - uB;

    // f2 = -(B1 + r B2) f1, degree 4
    RSeries D1(4);
    D1[0] = B1;
    D1[1] = B2;
    h.f2 = -(D1 * h.f1.truncated(4));
    return h;
}

ParamPoly symbolic_cos_alpha() {
    // (1 - tau^2) * itau
    ParamPoly t = ParamPoly::variable(sym::tau);
    ParamPoly one(1);
    return (one - t * t) * ParamPoly::variable(sym::itau);
}

ParamPoly symbolic_sin_alpha() {
    // 2 tau * itau
    ParamPoly t = ParamPoly::variable(sym::tau);
    t *= BigRational(2);
    return t * ParamPoly::variable(sym::itau);
}

namespace {

HalfSystemPolar rotated_half(HalfSystemPolar h, const ParamPoly& ca, const ParamPoly& sa) {
    h.f0 = h.f0.rotated(ca, sa);
    h.g0 = h.g0.rotated(ca, sa);
    h.f1 = h.f1.rotated(ca, sa);
    h.f2 = h.f2.rotated(ca, sa);
    return h;
}

void validate_center(LoudName plus, LoudName minus, const BigRational& tau) {
    if (plus == minus || tau == 0) return;
    if (plus == LoudName::LinearCenter || minus == LoudName::LinearCenter)
        throw std::invalid_argument("make_piecewise: mixed pairs with the linear toy "
                                    "are not supported for tau != 0");
    auto verdict = is_piecewise_center(plus, minus, tau, 12);
    if (verdict.verdict != CenterVerdict::CenterCertifiedToOrder)
        throw std::invalid_argument(
            "make_piecewise: " + system_name_str(plus) + "&" + system_name_str(minus) +
            " with tau=" + rational_str(tau) + " is not a center (sigma series of the "
            "first integrals differ at lambda order " + std::to_string(verdict.differing_order) + ")");
}

std::string tag_of(LoudName plus, LoudName minus) {
    if (plus == minus) return system_name_str(plus);
    return system_name_str(plus) + "&" + system_name_str(minus);
}

} // namespace

PiecewiseCenter make_piecewise(LoudName plus, LoudName minus, const BigRational& tau) {
    if (tau < BigRational(-1) || tau >= BigRational(1))
        throw std::invalid_argument("make_piecewise: tau must lie in [-1, 1)");
    validate_center(plus, minus, tau);
    PiecewiseCenter pc;
    pc.plus_name = plus;
    pc.minus_name = minus;
    pc.tau = tau;
    pc.tag = tag_of(plus, minus);
    LinePi line{tau};
    pc.plus = rotated_half(to_polar(builtin_system(plus), Side::Plus),
                           line.cos_alpha(), line.sin_alpha());
    pc.minus = rotated_half(to_polar(builtin_system(minus), Side::Minus),
                            line.cos_alpha(), line.sin_alpha());
    return pc;
}

PiecewiseCenter make_piecewise_symbolic_tau(LoudName plus, LoudName minus) {
    if (!(plus == minus || (plus != LoudName::S3 && plus != LoudName::S4 &&
                            minus != LoudName::S3 && minus != LoudName::S4)))
        throw std::invalid_argument("make_piecewise_symbolic_tau: mixed pair is a center "
                                    "for all tau only within {S1, S2}");
    PiecewiseCenter pc;
    pc.plus_name = plus;
    pc.minus_name = minus;
    pc.tau = std::nullopt;
    pc.tag = tag_of(plus, minus);
    ParamPoly ca = symbolic_cos_alpha();
    ParamPoly sa = symbolic_sin_alpha();
    pc.plus = rotated_half(to_polar(builtin_system(plus), Side::Plus), ca, sa);
    pc.minus = rotated_half(to_polar(builtin_system(minus), Side::Minus), ca, sa);
    return pc;
}

} // namespace pwq
