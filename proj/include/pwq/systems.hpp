#pragma once

#include "pwq/rseries.hpp"

#include <optional>
#include <string>

namespace pwq {

/// Planar quadratic vector field in canonical form: the linear part is
/// exactly (-y, x) and only the quadratic coefficients vary.
///   P = -y + p20 x^2 + p11 xy + p02 y^2
///   Q =  x + q20 x^2 + q11 xy + q02 y^2
struct PlanarQuadratic {
    BigRational p20, p11, p02;
    BigRational q20, q11, q02;
};

enum class LoudName { S1, S2, S3, S4, LinearCenter };

/// Exact coefficient sets of the isochronous Loud systems.
PlanarQuadratic builtin_system(LoudName name);
LoudName parse_system_name(const std::string& s);
std::string system_name_str(LoudName n);

/// Generic quadratic perturbation (P1, Q1) of one side, as power-basis trig
/// data evaluated on x = r cos, y = r sin. No constant terms.
struct PerturbationTemplate {
    // P1(r cos, r sin) = r*P11(theta) + r^2*P12(theta), same for Q1
    ThetaFourierPoly P11, P12, Q11, Q12;
};
PerturbationTemplate perturbation_template(Side side, int degree = 2);

/// Polar canonical data of one perturbed half: dr/dtheta is
///   F0 = r^2 f0 / (1 + r g0),   Fi = fi / (1 + r g0)^{li},
/// with f0, g0 parameter free and fi homogeneous of degree i in this
/// side's perturbation symbols.
struct HalfSystemPolar {
    Side side = Side::Plus;
    RSeries f0;  // r-polynomial, TFP coefficients (parameter free)
    RSeries g0;  // likewise
    RSeries f1;  // degree <= 3, linear in the side's symbols
    RSeries f2;  // degree <= 4, quadratic in the side's symbols
    int l1 = 2;
    int l2 = 3;
};

/// Converts the perturbed field to polar canonical data. Exact; the stored
/// pieces satisfy the dr/dtheta identity (see tests for the reconstruction
/// invariant).
HalfSystemPolar to_polar(const PlanarQuadratic& v, Side side);

/// Slope parameter tau in [-1,1) encoding the discontinuity line through
/// the origin: cos(alpha) = (1-tau^2)/(1+tau^2), sin(alpha) = 2tau/(1+tau^2).
struct LinePi {
    BigRational tau;
    ParamPoly cos_alpha() const {
        BigRational d = 1 + tau * tau;
        return ParamPoly(PiPoly((1 - tau * tau) / d));
    }
    ParamPoly sin_alpha() const {
        BigRational d = 1 + tau * tau;
        return ParamPoly(PiPoly(2 * tau / d));
    }
};

/// Symbolic line: tau carried as a formal symbol; itau stands for
/// 1/(1+tau^2) and is cleared during normalization of the results.
ParamPoly symbolic_cos_alpha();
ParamPoly symbolic_sin_alpha();

struct PiecewiseCenter {
    LoudName plus_name = LoudName::S1;
    LoudName minus_name = LoudName::S1;
    std::optional<BigRational> tau;    // empty = symbolic tau
    std::string tag;                   // e.g. "S1", "S1&S2"
    HalfSystemPolar plus;              // rotated polar data
    HalfSystemPolar minus;
};

/// Assembles a piecewise center with rotated polar data. For mixed pairs
/// with tau != 0 the combination must be a center (Loud pairs {S1,S2});
/// anything else is rejected with a diagnostic.
PiecewiseCenter make_piecewise(LoudName plus, LoudName minus, const BigRational& tau);

/// Same, with tau kept symbolic (first-order pipeline only).
PiecewiseCenter make_piecewise_symbolic_tau(LoudName plus, LoudName minus);

} // namespace pwq
