#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcomb/carlitz.hpp"
#include "qcomb/certified.hpp"
#include "qcomb/qcore.hpp"
#include "qcomb/verdict.hpp"

namespace qcomb {

// Parameters of the q-Poisson distribution p_k = exp_q(lambda)^-1 lambda^k/k_q!,
// plus the truncation policy used for every certified sum.
struct QPoissonParams {
    Rational lambda;
    Rational q;
    Rational eps;
    long max_terms;

    QPoissonParams(Rational lambda_, Rational q_, Rational eps_ = Rational(1, 1000000000000LL),
                   long max_terms_ = 100000)
        : lambda(std::move(lambda_)), q(std::move(q_)), eps(std::move(eps_)),
          max_terms(max_terms_) {
        if (lambda <= 0 || q <= 0) throw DomainError("q-Poisson needs lambda > 0 and q > 0");
        if (eps <= 0) throw DomainError("q-Poisson needs eps > 0");
    }
};

namespace detail {

inline void check_q_exp_converges(const QPoissonParams& p) {
    if (p.q < 1 && p.lambda * (1 - p.q) >= 1)
        throw ConvergenceError("exp_q(lambda) diverges: q < 1 requires lambda < 1/(1-q)");
}

// Certified enclosure of exp_q(lambda).
inline CertifiedValue certified_q_exp(const QPoissonParams& p) {
    check_q_exp_converges(p);
    Rational fact(1), kq(0), pw(1);
    return certified_positive_sum(
        [&](long k) {
            if (k > 0) {
                kq = kq * p.q + 1;
                fact *= kq;
                pw *= p.lambda;
            }
            return pw / fact;
        },
        p.eps, p.max_terms);
}

}  // namespace detail

// p_k as a certified enclosure: exact lambda^k/k_q! over a certified
// exp_q(lambda).
inline CertifiedValue pmf(long k, const QPoissonParams& params) {
    if (k < 0) throw DomainError("pmf needs k >= 0");
    Rational num = rat_pow(params.lambda, static_cast<unsigned>(k)) /
                   q_factorial_at(k, params.q);
    return certified_div(CertifiedValue::exact(num), detail::certified_q_exp(params));
}

// L_q applied to the n-th q-power: sum_k p_k (k_q)^n. At lambda = 1 the
// enclosure contains B_n(q).
inline CertifiedValue moment(long n, const QPoissonParams& params) {
    return dobinski_numeric(n, params.q, params.lambda, params.eps, params.max_terms);
}

// L_q applied to the m-th q-falling factorial: sum_k p_k qfall(k,m). Equals
// lambda^m, hence exactly 1 at lambda = 1 -- the executable face of the
// paper's moment identity.
inline CertifiedValue factorial_moment(long m, const QPoissonParams& params) {
    if (m < 0) throw DomainError("factorial_moment needs m >= 0");
    detail::check_q_exp_converges(params);
    Rational fact(1), kq(0), pw(1);
    CertifiedValue num = certified_positive_sum(
        [&](long k) {
            if (k > 0) {
                kq = kq * params.q + 1;
                fact *= kq;
                pw *= params.lambda;
            }
            return pw * q_falling_factorial_at(k, m, params.q) / fact;
        },
        params.eps, params.max_terms);
    return certified_div(num, detail::certified_q_exp(params));
}

// Generating-function coefficients u_n = lambda^n/n_q! of G(t) with the
// common 1/exp_q(lambda) normalizer deliberately omitted: every identity we
// check is arranged so the normalizer cancels, keeping the checks exact.
inline TruncatedSeries<Rational> pgf_unnormalized(const QPoissonParams& params,
                                                  std::size_t order) {
    TruncatedSeries<Rational> s(Var::t, order);
    Rational fact(1), kq(0), pw(1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) {
            kq = kq * params.q + 1;
            fact *= kq;
            pw *= params.lambda;
        }
        s.set_coeff(k, pw / fact);
    }
    return s;
}

// Executable form of the paper's two G(t) relations, exp_q cancelled:
//  (a) n-fold Jackson derivative at t = 0 divided by n_q! recovers u_n;
//  (b) n_q u_n = lambda u_{n-1} termwise, i.e. [d_q G]_{t=1} = lambda.
// `series_override` lets tests inject a corrupted coefficient.
inline VerifyReport verify_eq8(const QPoissonParams& params, std::size_t order,
                               std::optional<TruncatedSeries<Rational>> series_override = {}) {
    if (order < 2) throw DomainError("verify_eq8 needs order >= 2");
    TruncatedSeries<Rational> g =
        series_override ? std::move(*series_override) : pgf_unnormalized(params, order);
    if (g.order() != order) throw DomainError("series order mismatch in verify_eq8");

    // (a) q-Maclaurin recovery
    TruncatedSeries<Rational> d = g;
    Rational nfact(1), nq(0);
    for (std::size_t n = 0; n <= order; ++n) {
        if (n > 0) {
            nq = nq * params.q + 1;
            nfact *= nq;
        }
        if (d.coeff(0) != nfact * g.coeff(n))
            return VerifyReport::fail("Maclaurin recovery fails at n=" + std::to_string(n));
        if (n < order) d = jackson_derivative(d, params.q);
    }

    // (b) termwise mean identity
    nq = 0;
    for (std::size_t n = 1; n <= order; ++n) {
        nq = nq * params.q + 1;
        if (nq * g.coeff(n) != params.lambda * g.coeff(n - 1))
            return VerifyReport::fail("mean identity fails at n=" + std::to_string(n));
    }
    return VerifyReport::ok("G(t) relations hold through order " + std::to_string(order));
}

}  // namespace qcomb
