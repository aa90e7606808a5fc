#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pwq {

using BigInt = boost::multiprecision::mpz_int;

/// Exact rational number, always stored canonically (lowest terms,
/// positive denominator). GMP-backed.
using BigRational = boost::multiprecision::mpq_rational;

inline BigRational rat(long n, long d = 1) { return BigRational(n, d); }

/// Parses "p", "-p/q" or "p/q". Throws std::invalid_argument on junk.
inline BigRational parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    try {
        BigRational v{std::string(s)};
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: bad rational '" + std::string(s) + "'");
    }
}

/// Canonical "p/q" form; integers render without "/1".
inline std::string rational_str(const BigRational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

inline double to_double(const BigRational& v) { return v.template convert_to<double>(); }

} // namespace pwq
