#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "qcomb/errors.hpp"

namespace qcomb {

// Exact scalars. GMP-backed: numerator/denominator are always kept coprime
// with positive denominator by the backend, which is exactly the canonical
// form we need everywhere.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Renders "a/b", or just "a" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "a" or "a/b" with optional sign; b must be nonzero.
inline Rational parse_rational(const std::string& s) {
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw DomainError("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("cannot parse rational: '" + s + "'");
    }
}

inline Integer int_pow(Integer base, unsigned exp) {
    Integer out(1);
    while (exp) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

inline Rational rat_pow(const Rational& base, unsigned exp) {
    return Rational(int_pow(numerator(base), exp), int_pow(denominator(base), exp));
}

}  // namespace qcomb
