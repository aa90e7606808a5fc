#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pwq {

/// Fixed, immutable symbol registry. Ids double as the canonical parameter
/// order used by the independence ladder (minus side before plus side,
/// a before b, graded lex in the exponent pair).
namespace sym {

using Id = std::uint8_t;

// Perturbation coefficients a^s_{e1 e2}, b^s_{e1 e2}, 0 < e1+e2 <= 2.
inline constexpr Id a_m10 = 0, a_m01 = 1, a_m20 = 2, a_m11 = 3, a_m02 = 4;
inline constexpr Id b_m10 = 5, b_m01 = 6, b_m20 = 7, b_m11 = 8, b_m02 = 9;
inline constexpr Id a_p10 = 10, a_p01 = 11, a_p20 = 12, a_p11 = 13, a_p02 = 14;
inline constexpr Id b_p10 = 15, b_p01 = 16, b_p20 = 17, b_p11 = 18, b_p02 = 19;
inline constexpr Id kPerturbationCount = 20;

// Formal slope symbols for the symbolic-tau pipeline: tau itself and
// itau = 1/(1 + tau^2), kept as an independent symbol until normalization.
inline constexpr Id tau = 20, itau = 21;

// Analysis bookkeeping symbols.
inline constexpr Id alpha1 = 22; // alpha1..alpha15 are contiguous
inline constexpr Id gamma7 = 37, gamma8 = 38, gamma9 = 39;
inline constexpr Id z1 = 40, z2 = 41, z3 = 42;
inline constexpr Id kCount = 43;

inline constexpr std::array<std::string_view, kCount> kNames = {
    "a-10", "a-01", "a-20", "a-11", "a-02",
    "b-10", "b-01", "b-20", "b-11", "b-02",
    "a+10", "a+01", "a+20", "a+11", "a+02",
    "b+10", "b+01", "b+20", "b+11", "b+02",
    "tau",  "itau",
    "alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha6", "alpha7",
    "alpha8", "alpha9", "alpha10", "alpha11", "alpha12", "alpha13", "alpha14",
    "alpha15",
    "gamma7", "gamma8", "gamma9",
    "z1", "z2", "z3",
};

inline constexpr Id alpha(int k) {
    return static_cast<Id>(alpha1 + (k - 1)); // k in 1..15
}

inline std::string_view name(Id id) {
    if (id >= kCount) throw std::out_of_range("sym::name: bad id");
    return kNames[id];
}

inline Id from_name(std::string_view n) {
    for (Id i = 0; i < kCount; ++i)
        if (kNames[i] == n) return i;
    throw std::invalid_argument("sym::from_name: unknown symbol '" + std::string(n) + "'");
}

inline constexpr bool is_perturbation(Id id) { return id < kPerturbationCount; }

/// a <-> b within one side keeps offset; this flips the side of a
/// perturbation symbol (a-10 <-> a+10 and so on).
inline constexpr Id swap_side(Id id) {
    return static_cast<Id>(id < 10 ? id + 10 : (id < 20 ? id - 10 : id));
}

/// Perturbation symbol from parts: kind 'a' or 'b', side '+' or '-',
/// exponent pair with 0 < e1+e2 <= 2.
inline Id coeff(char kind, char side, int e1, int e2) {
    int base = (side == '-') ? 0 : 10;
    base += (kind == 'b') ? 5 : 0;
    int off;
    if (e1 == 1 && e2 == 0) off = 0;
    else if (e1 == 0 && e2 == 1) off = 1;
    else if (e1 == 2 && e2 == 0) off = 2;
    else if (e1 == 1 && e2 == 1) off = 3;
    else if (e1 == 0 && e2 == 2) off = 4;
    else throw std::invalid_argument("sym::coeff: exponent out of range");
    return static_cast<Id>(base + off);
}

} // namespace sym

} // namespace pwq
