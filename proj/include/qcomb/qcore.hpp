#pragma once

#include <vector>

#include "qcomb/qpoly.hpp"
#include "qcomb/qrational_function.hpp"
#include "qcomb/truncated_series.hpp"

namespace qcomb {

// q-integer n_q = 1 + q + ... + q^(n-1); q_int(0) = 0.
inline QPoly q_int(long n) {
    if (n < 0) throw DomainError("q_int of negative argument");
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(1));
    return QPoly(std::move(c));
}

// As q_int but with negative arguments collapsing to 0, the convention used
// inside falling-factorial products.
inline QPoly q_int_or_zero(long n) { return n <= 0 ? QPoly() : q_int(n); }

inline QPoly q_factorial(long n) {
    if (n < 0) throw DomainError("q_factorial of negative argument");
    QPoly out(1);
    for (long j = 2; j <= n; ++j) out *= q_int(j);
    return out;
}

// Gaussian binomial via the q-Pascal recurrence
//   [n k] = [n-1 k-1] + q^k [n-1 k];
// out-of-range k gives 0.
inline QPoly q_binomial(long n, long k) {
    if (n < 0) throw DomainError("q_binomial with negative n");
    if (k < 0 || k > n) return QPoly();
    std::vector<QPoly> row{QPoly(1)};  // row 0
    for (long i = 1; i <= n; ++i) {
        std::vector<QPoly> next(static_cast<std::size_t>(i) + 1);
        next[0] = QPoly(1);
        next[static_cast<std::size_t>(i)] = QPoly(1);
        for (long j = 1; j < i; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                QPoly::monomial(Rational(1), static_cast<std::size_t>(j)) *
                    row[static_cast<std::size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

// x_q (x-1)_q ... (x-k+1)_q; vanishes when k > x, empty product for k = 0.
inline QPoly q_falling_factorial(long x, long k) {
    if (x < 0 || k < 0) throw DomainError("q_falling_factorial needs x, k >= 0");
    QPoly out(1);
    for (long j = 0; j < k; ++j) {
        QPoly f = q_int_or_zero(x - j);
        if (f.is_zero()) return QPoly();
        out *= f;
    }
    return out;
}

// Numeric counterparts at a fixed rational q.
inline Rational q_int_at(long n, const Rational& q) { return q_int_or_zero(n).eval(q); }

inline Rational q_factorial_at(long n, const Rational& q) {
    if (n < 0) throw DomainError("q_factorial of negative argument");
    Rational out(1);
    Rational cur(0);  // running n_q
    for (long j = 1; j <= n; ++j) {
        cur = cur * q + 1;  // (j)_q = 1 + q*(j-1)_q
        out *= cur;
    }
    return out;
}

inline Rational q_falling_factorial_at(long x, long k, const Rational& q) {
    if (x < 0 || k < 0) throw DomainError("q_falling_factorial needs x, k >= 0");
    if (k > x) return Rational(0);
    Rational out(1);
    for (long j = 0; j < k; ++j) out *= q_int_at(x - j, q);
    return out;
}

// Truncated q-exponential exp_q(lambda) = sum lambda^k / k_q! with symbolic q.
inline TruncatedSeries<QRationalFunction> q_exp_series_symbolic(std::size_t order) {
    TruncatedSeries<QRationalFunction> s(Var::lambda, order);
    QPoly fact(1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) fact *= q_int(static_cast<long>(k));
        s.set_coeff(k, QRationalFunction(QPoly(1), fact));  // already reduced
    }
    return s;
}

// Same at a fixed rational q > 0.
inline TruncatedSeries<Rational> q_exp_series_at(std::size_t order, const Rational& q) {
    if (q <= 0) throw DomainError("q_exp_series requires q > 0");
    TruncatedSeries<Rational> s(Var::lambda, order);
    Rational fact(1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) {
            Rational kq = q_int_at(static_cast<long>(k), q);
            if (kq == 0) throw DomainError("vanishing q-integer in q_exp_series");
            fact *= kq;
        }
        s.set_coeff(k, Rational(1) / fact);
    }
    return s;
}

namespace detail {

template <class Coeff, class QIntFn>
TruncatedSeries<Coeff> jackson_impl(const TruncatedSeries<Coeff>& f, QIntFn&& qint_of) {
    if (f.order() < 1)
        throw DomainError("jackson_derivative of an order-0 series");
    TruncatedSeries<Coeff> out(f.variable(), f.order() - 1);
    for (std::size_t n = 0; n + 1 <= f.order(); ++n)
        out.set_coeff(n, qint_of(static_cast<long>(n + 1)) * f.coeff(n + 1));
    return out;
}

}  // namespace detail

// Jackson derivative on coefficients: coefficient n of the result is
// (n+1)_q * coefficient n+1 of f. Valid at q = 1 too, where (n+1)_q = n+1.
inline TruncatedSeries<QRationalFunction> jackson_derivative(
    const TruncatedSeries<QRationalFunction>& f) {
    return detail::jackson_impl(f, [](long n) { return QRationalFunction(q_int(n)); });
}

inline TruncatedSeries<QPoly> jackson_derivative(const TruncatedSeries<QPoly>& f) {
    return detail::jackson_impl(f, [](long n) { return q_int(n); });
}

inline TruncatedSeries<Rational> jackson_derivative(const TruncatedSeries<Rational>& f,
                                                    const Rational& q) {
    return detail::jackson_impl(f, [&q](long n) { return q_int_at(n, q); });
}

}  // namespace qcomb
