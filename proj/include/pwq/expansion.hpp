#pragma once

#include "pwq/systems.hpp"

#include <string>
#include <vector>

namespace pwq {

/// Taylor-in-r jet of the half-turn solutions: xi[i] is the series
/// sum_j xi_{i,j}(theta) r^j for one side, i = 0..order.
struct HalfJet {
    Side side = Side::Plus;
    int order = 0;
    int N = 0;
    std::vector<RSeries> xi; // xi[i], trunc N; xi[0] has coefficient 1 at r^1
};

struct Jet {
    int order = 0;
    int N = 0;
    HalfJet plus;
    HalfJet minus;
};

/// Table psi_{i,j} = xi^+_{i,j}(pi) - xi^-_{i,j}(-pi), i = 0..order,
/// j = 1..N. psi[0][*] vanish for a center; psi_{i,j} is homogeneous of
/// degree i in the perturbation symbols (both asserted on construction).
struct DifferenceJet {
    std::string system;
    std::string tau_str; // exact fraction, or "symbolic"
    int order = 0;
    int N = 0;
    std::vector<std::vector<ParamPoly>> psi; // psi[i][j-1], i = 1..order stored from index 1

    const ParamPoly& at(int i, int j) const { return psi.at(i).at(j - 1); }
};

/// Order-0 jet: solves the implicit ODE of the unperturbed polar equation
/// coefficientwise by exact trigonometric integration.
HalfJet expand_order0(const HalfSystemPolar& h, int N);

/// Extends with the order-1 variational coefficients.
void expand_order1(const HalfSystemPolar& h, HalfJet& jet);

/// Extends with the order-2 variational coefficients.
void expand_order2(const HalfSystemPolar& h, HalfJet& jet);

Jet expand(const PiecewiseCenter& sys, int order, int N);

DifferenceJet difference(const PiecewiseCenter& sys, const Jet& jets);

/// Convenience: expand + difference.
DifferenceJet difference_jet(const PiecewiseCenter& sys, int order, int N);

/// psi_{1,j} as num/(1+tau^2)^k with tau formal, for the symbolic-tau
/// pipeline (first order only).
struct TauPsi {
    ParamPoly num;     // polynomial in tau and the perturbation symbols
    int itau_power = 0;
};

struct SymbolicTauJet {
    std::string system;
    int N = 0;
    std::vector<TauPsi> psi1; // psi1[j-1]
};

SymbolicTauJet difference_symbolic_tau(LoudName plus, LoudName minus, int N);

/// Clears the itau symbol: p = num / (1+tau^2)^k with k minimal.
TauPsi normalize_itau(const ParamPoly& p);

/// Substitutes a concrete rational tau into a normalized TauPsi.
ParamPoly tau_psi_at(const TauPsi& tp, const BigRational& tau);

} // namespace pwq
