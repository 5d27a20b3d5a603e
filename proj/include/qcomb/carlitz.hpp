#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcomb/certified.hpp"
#include "qcomb/qcore.hpp"
#include "qcomb/verdict.hpp"

namespace qcomb {

// Triangular table of Carlitz q-Stirling numbers of the second kind,
// S_q[n,k] for 0 <= k <= n <= n_max. Two independent construction routes:
// the production recurrence
//     S[n,k] = q^(k-1) S[n-1,k-1] + k_q S[n-1,k]
// and a triangular solve of the defining relation
//     (x_q)^n = sum_k S[n,k] * qfall(x,k)
// imposed at x = 0..n. Tests confirm the two agree before the recurrence is
// trusted anywhere.
class QStirlingTable {
public:
    enum class Method { recurrence, defining_relation };

    explicit QStirlingTable(long n_max, Method method = Method::recurrence) : n_max_(n_max) {
        if (n_max < 0) throw DomainError("QStirlingTable needs n_max >= 0");
        rows_.resize(static_cast<std::size_t>(n_max) + 1);
        if (method == Method::recurrence)
            build_recurrence();
        else
            build_defining_relation();
    }

    long n_max() const { return n_max_; }

    const QPoly& entry(long n, long k) const {
        if (n < 0 || n > n_max_ || k < 0 || k > n)
            throw DomainError("QStirlingTable entry out of range");
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    // Mutable access, used by fault-injection tests to corrupt one entry.
    void set_entry(long n, long k, QPoly p) {
        entry(n, k);  // range check
        rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(p);
    }

private:
    void build_recurrence() {
        rows_[0] = {QPoly(1)};
        for (long n = 1; n <= n_max_; ++n) {
            auto& row = rows_[static_cast<std::size_t>(n)];
            const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
            row.assign(static_cast<std::size_t>(n) + 1, QPoly());
            for (long k = 1; k <= n; ++k) {
                QPoly val = QPoly();
                if (k - 1 <= n - 1)
                    val += QPoly::monomial(Rational(1), static_cast<std::size_t>(k - 1)) *
                           prev[static_cast<std::size_t>(k - 1)];
                if (k <= n - 1) val += q_int(k) * prev[static_cast<std::size_t>(k)];
                row[static_cast<std::size_t>(k)] = std::move(val);
            }
        }
    }

    // Back-substitution: S[n,x] = ((x_q)^n - sum_{k<x} S[n,k] qfall(x,k)) / x_q!,
    // exact polynomial division throughout.
    void build_defining_relation() {
        for (long n = 0; n <= n_max_; ++n) {
            auto& row = rows_[static_cast<std::size_t>(n)];
            row.assign(static_cast<std::size_t>(n) + 1, QPoly());
            for (long x = 0; x <= n; ++x) {
                QPoly rhs = q_int(x).pow(static_cast<unsigned>(n));
                for (long k = 0; k < x; ++k)
                    rhs -= row[static_cast<std::size_t>(k)] * q_falling_factorial(x, k);
                row[static_cast<std::size_t>(x)] = rhs.div_exact(q_factorial(x));
            }
        }
    }

    long n_max_;
    std::vector<std::vector<QPoly>> rows_;
};

inline QPoly carlitz_stirling(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw DomainError("carlitz_stirling needs 0 <= k <= n");
    return QStirlingTable(n).entry(n, k);
}

// q-Bell polynomial B_n(q) with its lambda refinement: lambda_coeffs[k] is
// the coefficient of lambda^k, and poly is their sum (lambda = 1).
struct QBellValue {
    long n;
    QPoly poly;
    std::vector<QPoly> lambda_coeffs;
};

inline QBellValue q_bell(long n) {
    if (n < 0) throw DomainError("q_bell needs n >= 0");
    QStirlingTable table(n);
    QBellValue out{n, QPoly(), {}};
    out.lambda_coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        out.lambda_coeffs.push_back(table.entry(n, k));
        out.poly += out.lambda_coeffs.back();
    }
    return out;
}

// Checks (x_q)^n = sum_k S[n,k]*qfall(x,k) as an exact polynomial identity in
// q for every integer x in 0..x_max.
inline VerifyReport verify_defining_relation(const QStirlingTable& table, long n, long x_max) {
    if (n < 0 || n > table.n_max()) throw DomainError("n out of table range");
    if (x_max < n) throw DomainError("verify_defining_relation needs x_max >= n");
    for (long x = 0; x <= x_max; ++x) {
        QPoly lhs = q_int(x).pow(static_cast<unsigned>(n));
        QPoly rhs;
        for (long k = 0; k <= n; ++k) rhs += table.entry(n, k) * q_falling_factorial(x, k);
        if (lhs != rhs)
            return VerifyReport::fail("defining relation fails at n=" + std::to_string(n) +
                                      ", x=" + std::to_string(x));
    }
    return VerifyReport::ok("defining relation holds for n=" + std::to_string(n) +
                            ", x=0.." + std::to_string(x_max));
}

inline VerifyReport verify_defining_relation(long n, long x_max) {
    return verify_defining_relation(QStirlingTable(n), n, x_max);
}

// Formal q-Dobinski check at order K with symbolic q:
//   sum_k lambda^k (k_q)^n / k_q!  ==  exp_q(lambda) * sum_j S[n,j] lambda^j
// coefficient-wise in QRationalFunction, plus the factorial-moment identity
//   sum_k lambda^k qfall(k,m)/k_q!  ==  lambda^m exp_q(lambda)
// for every m <= n. `bell_lambda_coeffs` may be overridden (fault injection).
inline VerifyReport dobinski_formal_verify(
    long n, std::size_t order,
    std::optional<std::vector<QPoly>> bell_lambda_coeffs = {}) {
    if (n < 0) throw DomainError("dobinski_formal_verify needs n >= 0");
    if (order < static_cast<std::size_t>(n)) throw DomainError("order must be >= n");

    std::vector<QPoly> bell =
        bell_lambda_coeffs ? std::move(*bell_lambda_coeffs) : q_bell(n).lambda_coeffs;

    TruncatedSeries<QRationalFunction> lhs(Var::lambda, order);
    QPoly fact(1);
    std::vector<QPoly> factorials{fact};  // k_q! for k = 0..order
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) {
            fact *= q_int(static_cast<long>(k));
            factorials.push_back(fact);
        }
        lhs.set_coeff(k, QRationalFunction(q_int(static_cast<long>(k)).pow(
                                               static_cast<unsigned>(n)),
                                           factorials[k]));
    }

    TruncatedSeries<QRationalFunction> bell_series(Var::lambda, order);
    for (std::size_t j = 0; j < bell.size() && j <= order; ++j)
        bell_series.set_coeff(j, QRationalFunction(bell[j]));
    TruncatedSeries<QRationalFunction> rhs = q_exp_series_symbolic(order) * bell_series;

    for (std::size_t k = 0; k <= order; ++k)
        if (lhs.coeff(k) != rhs.coeff(k))
            return VerifyReport::fail("q-Dobinski mismatch at lambda^" + std::to_string(k) +
                                      " for n=" + std::to_string(n));

    // factorial-moment identity, termwise: qfall(k,m)/k_q! == 1/(k-m)_q!
    for (long m = 0; m <= n; ++m) {
        for (std::size_t k = 0; k <= order; ++k) {
            QRationalFunction term(q_falling_factorial(static_cast<long>(k), m), factorials[k]);
            QRationalFunction expect =
                k >= static_cast<std::size_t>(m)
                    ? QRationalFunction(QPoly(1), factorials[k - static_cast<std::size_t>(m)])
                    : QRationalFunction();
            if (term != expect)
                return VerifyReport::fail("factorial-moment identity fails at m=" +
                                          std::to_string(m) + ", lambda^" + std::to_string(k));
        }
    }
    return VerifyReport::ok("q-Dobinski formal identity holds for n=" + std::to_string(n) +
                            " through order " + std::to_string(order));
}

// Certified numeric q-Dobinski value: sum_k lambda^k (k_q)^n / k_q! divided
// by the same-truncation partial sum of exp_q(lambda), with geometric tail
// bounds on both series. The enclosure contains sum_j S[n,j](q) lambda^j.
inline CertifiedValue dobinski_numeric(long n, const Rational& q, const Rational& lambda,
                                       const Rational& eps, long max_terms = 100000) {
    if (n < 0) throw DomainError("dobinski_numeric needs n >= 0");
    if (q <= 0 || lambda <= 0) throw DomainError("dobinski_numeric needs q > 0 and lambda > 0");
    if (eps <= 0) throw DomainError("dobinski_numeric needs eps > 0");
    // exp_q radius of convergence is 1/(1-q) for q < 1
    if (q < 1 && lambda * (1 - q) >= 1)
        throw ConvergenceError("exp_q(lambda) diverges: q < 1 requires lambda < 1/(1-q)");

    Rational num_sum(0), den_sum(0);
    Rational num_term(n == 0 ? 1 : 0), den_term(1);  // k = 0 terms
    Rational prev_num_ratio(-1), prev_den_ratio(-1);
    Rational kq(0);
    Rational last_bound(-1);
    for (long k = 0; k < max_terms; ++k) {
        num_sum += num_term;
        den_sum += den_term;
        // term ratios t_{k+1}/t_k; the numerator ratio is undefined at k = 0
        // where the term itself vanishes (n >= 1)
        Rational next_kq = kq * q + 1;  // (k+1)_q
        Rational den_ratio = lambda / next_kq;
        Rational num_ratio(-1);
        Rational next_num_term;
        if (n == 0 || kq != 0) {
            num_ratio = n == 0 ? den_ratio
                               : den_ratio * rat_pow(next_kq / kq, static_cast<unsigned>(n));
            next_num_term = num_term * num_ratio;
        } else {
            next_num_term = lambda;  // t_1 = lambda * 1^n / 1_q!
        }
        Rational next_den_term = den_term * den_ratio;
        // certify only once both ratios are < 1 and observed non-increasing
        bool ratios_ready = num_ratio > 0 && num_ratio < 1 && den_ratio < 1 &&
                            prev_num_ratio > 0 && num_ratio <= prev_num_ratio &&
                            den_ratio <= prev_den_ratio;
        if (ratios_ready) {
            Rational num_tail = next_num_term / (1 - num_ratio);
            Rational den_tail = next_den_term / (1 - den_ratio);
            Rational lo = num_sum / (den_sum + den_tail);
            Rational hi = (num_sum + num_tail) / den_sum;
            last_bound = (hi - lo) / 2;
            if (last_bound <= eps) return CertifiedValue(lo, hi);
        }
        if (num_ratio > 0) prev_num_ratio = num_ratio;
        prev_den_ratio = den_ratio;
        num_term = next_num_term;
        den_term = next_den_term;
        kq = next_kq;
    }
    throw ConvergenceError("tail certification failed within " + std::to_string(max_terms) +
                               " terms",
                           static_cast<double>(last_bound));
}

}  // namespace qcomb
