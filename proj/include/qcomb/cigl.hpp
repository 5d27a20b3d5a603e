#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "qcomb/partition_oracle.hpp"
#include "qcomb/qcore.hpp"
#include "qcomb/truncated_series.hpp"
#include "qcomb/verdict.hpp"

namespace qcomb {

namespace detail {

// Classical Stirling numbers, counted by the partition oracle (not by a
// recurrence) and memoized across calls. Value-returning under the lock so
// concurrent growth of the cache cannot invalidate a caller's view.
inline long classical_stirling2(long m, long r) {
    if (m < 0 || r < 0 || r > m) return 0;
    static std::mutex mu;
    static std::vector<std::vector<long>> cache{{1}};
    std::lock_guard<std::mutex> lock(mu);
    if (static_cast<long>(cache.size()) <= m) cache = oracle_stirling_triangle(m);
    return cache[static_cast<std::size_t>(m)][static_cast<std::size_t>(r)];
}

}  // namespace detail

// Cigler q-Stirling number: weighted count of k-block partitions of
// {0,...,n-1} by q^{cigl(pi)}. Closed form: the j nonzero elements joining
// the block of 0 contribute the subset-sum generating function
// q^{j(j+1)/2} [n-1 j]_q, the remaining n-1-j elements partition classically.
inline QPoly cigl_stirling(long n, long k) {
    if (n < 1 || k < 0 || k > n) throw DomainError("cigl_stirling needs n >= 1, 0 <= k <= n");
    QPoly out;
    for (long j = 0; j <= n - 1; ++j) {
        long s2 = detail::classical_stirling2(n - 1 - j, k - 1);
        if (s2 == 0) continue;
        out += QPoly::monomial(Rational(s2), static_cast<std::size_t>(j * (j + 1) / 2)) *
               q_binomial(n - 1, j);
    }
    return out;
}

inline QPoly cigl_bell(long n) {
    if (n < 1) throw DomainError("cigl_bell needs n >= 1");
    QPoly out;
    for (long k = 1; k <= n; ++k) out += cigl_stirling(n, k);
    return out;
}

// The n-th cigl q-power x(x+q-1)(x-1+q^2)...(x-1+q^(n-1)) expanded in the
// monomial basis of x; coefficient m is a QPoly in q.
struct CiglFallingPower {
    long n;
    std::vector<QPoly> monomial_coeffs;  // index m = coefficient of x^m

    // Evaluates at an integer x, yielding a QPoly in q.
    QPoly at(long x) const {
        QPoly out;
        Rational xp(1);
        for (const auto& c : monomial_coeffs) {
            out += c * xp;
            xp *= x;
        }
        return out;
    }
};

inline CiglFallingPower cigl_falling_power(long n) {
    if (n < 1) throw DomainError("cigl_falling_power needs n >= 1");
    std::vector<QPoly> coeffs{QPoly(1)};  // the empty product
    for (long j = 0; j < n; ++j) {
        // multiply by (x + (q^j - 1)); for j = 0 the shift is 0 and the
        // factor is exactly x
        QPoly shift = QPoly::monomial(Rational(1), static_cast<std::size_t>(j)) - QPoly(1);
        std::vector<QPoly> next(coeffs.size() + 1);
        for (std::size_t m = 0; m < coeffs.size(); ++m) {
            next[m + 1] += coeffs[m];
            if (!shift.is_zero()) next[m] += shift * coeffs[m];
        }
        coeffs = std::move(next);
    }
    return CiglFallingPower{n, std::move(coeffs)};
}

// Coefficients c_{n,m} of the cigl q-power in the ordinary falling-factorial
// basis, via x^m = sum_r S2(m,r) x^(r falling).
inline std::vector<QPoly> cigl_falling_power_expand(long n) {
    CiglFallingPower p = cigl_falling_power(n);
    std::vector<QPoly> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t m = 0; m < p.monomial_coeffs.size(); ++m)
        for (long r = 0; r <= static_cast<long>(m); ++r) {
            long s2 = detail::classical_stirling2(static_cast<long>(m), r);
            if (s2 != 0) c[static_cast<std::size_t>(r)] += p.monomial_coeffs[m] * Rational(s2);
        }
    return c;
}

// cigl-q-Dobinski, both faces:
//  (a) sum_m c_{n,m} == cigl_bell(n), the Poisson(1) functional sending every
//      ordinary falling factorial to 1;
//  (b) formal in lambda: sum_k lambda^k P_n(k)/k! == exp(lambda) *
//      sum_m c_{n,m} lambda^m through the given order, with QPoly
//      coefficients over plain rational k! denominators.
inline VerifyReport cigl_dobinski_verify(long n, std::size_t order,
                                         std::optional<std::vector<QPoly>> c_override = {}) {
    if (n < 1) throw DomainError("cigl_dobinski_verify needs n >= 1");
    if (order < static_cast<std::size_t>(n)) throw DomainError("order must be >= n");
    std::vector<QPoly> c = c_override ? std::move(*c_override) : cigl_falling_power_expand(n);

    QPoly csum;
    for (const auto& cm : c) csum += cm;
    if (csum != cigl_bell(n))
        return VerifyReport::fail("sum of falling-basis coefficients != cigl_bell(" +
                                  std::to_string(n) + ")");

    CiglFallingPower p = cigl_falling_power(n);
    TruncatedSeries<QPoly> lhs(Var::lambda, order);
    Rational kfact(1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) kfact *= static_cast<long>(k);
        lhs.set_coeff(k, p.at(static_cast<long>(k)) * (Rational(1) / kfact));
    }

    TruncatedSeries<QPoly> exp_series(Var::lambda, order);
    kfact = 1;
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) kfact *= static_cast<long>(k);
        exp_series.set_coeff(k, QPoly(Rational(1) / kfact));
    }
    TruncatedSeries<QPoly> c_series(Var::lambda, order);
    for (std::size_t m = 0; m < c.size() && m <= order; ++m) c_series.set_coeff(m, c[m]);
    TruncatedSeries<QPoly> rhs = exp_series * c_series;

    for (std::size_t k = 0; k <= order; ++k)
        if (lhs.coeff(k) != rhs.coeff(k))
            return VerifyReport::fail("cigl-Dobinski series mismatch at lambda^" +
                                      std::to_string(k) + " for n=" + std::to_string(n));
    return VerifyReport::ok("cigl-q-Dobinski holds for n=" + std::to_string(n) +
                            " through order " + std::to_string(order));
}

}  // namespace qcomb
