#pragma once

#include <cmath>
#include <utility>

#include "qcomb/rational.hpp"

namespace qcomb {

// Enclosure [lo, hi] of an infinite-sum value, with exact rational endpoints.
// Downstream comparisons use containment, never bare equality.
struct CertifiedValue {
    Rational lo;
    Rational hi;

    CertifiedValue(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (hi < lo) throw DomainError("certified interval with hi < lo");
    }

    static CertifiedValue exact(const Rational& v) { return CertifiedValue(v, v); }

    Rational midpoint() const { return (lo + hi) / 2; }
    Rational half_width() const { return (hi - lo) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }

    double estimate() const { return static_cast<double>(midpoint()); }
    double half_width_double() const {
        // round away from zero so the printed bound stays valid
        double w = static_cast<double>(half_width());
        return std::nextafter(w, w + 1.0);
    }
};

// Certified sum of a nonnegative-term series whose term ratios are
// eventually < 1 and non-increasing. Certifies the tail geometrically once
// two consecutive ratios confirm the decrease; throws ConvergenceError if the
// half-width target is not met within max_terms.
template <class TermFn>
CertifiedValue certified_positive_sum(TermFn term, const Rational& eps, long max_terms = 100000) {
    if (eps <= 0) throw DomainError("certified_positive_sum needs eps > 0");
    Rational sum(0);
    Rational prev_term(-1), prev_ratio(-1);
    Rational last_bound(-1);
    for (long k = 0; k < max_terms; ++k) {
        Rational t = term(k);
        if (t < 0) throw DomainError("certified_positive_sum needs nonnegative terms");
        sum += t;
        if (prev_term > 0 && t > 0) {
            Rational ratio = t / prev_term;
            if (ratio < 1 && prev_ratio > 0 && ratio <= prev_ratio) {
                Rational tail = t * ratio / (1 - ratio);
                last_bound = tail / 2;
                if (last_bound <= eps) return CertifiedValue(sum, sum + tail);
            }
            prev_ratio = ratio;
        }
        if (t > 0) prev_term = t;
    }
    throw ConvergenceError("tail certification failed within " + std::to_string(max_terms) +
                               " terms",
                           last_bound >= 0 ? static_cast<double>(last_bound) : -1.0);
}

// Interval quotient; the divisor must be strictly positive.
inline CertifiedValue certified_div(const CertifiedValue& a, const CertifiedValue& b) {
    if (b.lo <= 0) throw DomainError("certified_div needs a strictly positive divisor");
    return CertifiedValue(a.lo / b.hi, a.hi / b.lo);
}

}  // namespace qcomb
