#pragma once

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qcomb/qcore.hpp"
#include "qcomb/rational.hpp"

namespace qcomb {

// An arbitrary exact sequence psi_0, psi_1, ... with psi_0 = 0, standing in
// for the q-integers. Built-ins: gauss(q), natural, fibonacci; user sequences
// load from a file of "n value" pairs.
class PsiSequence {
public:
    static PsiSequence gauss(const Rational& q) {
        return PsiSequence("gauss(" + qcomb::to_string(q) + ")",
                           [q](long n) { return q_int_at(n, q); });
    }

    static PsiSequence natural() {
        return PsiSequence("natural", [](long n) { return Rational(n); });
    }

    static PsiSequence fibonacci() {
        return PsiSequence("fibonacci", [](long n) {
            Integer a(0), b(1);
            for (long i = 0; i < n; ++i) {
                Integer c = a + b;
                a = b;
                b = c;
            }
            return Rational(a);
        });
    }

    // File format: one "n value" pair per line, value as "a/b" or "a";
    // blank lines and lines starting with '#' are skipped. Index 0 with
    // value 0 is mandatory; missing indices are an error on access, never
    // interpolated.
    static PsiSequence from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw DomainError("cannot open psi-sequence file: " + path);
        std::map<long, Rational> values;
        std::string line;
        long lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::string ntok, vtok;
            if (!(ls >> ntok)) continue;
            if (ntok[0] == '#') continue;
            if (!(ls >> vtok))
                throw DomainError("malformed psi-sequence line " + std::to_string(lineno) +
                                  " in " + path);
            long n;
            try {
                n = std::stol(ntok);
            } catch (const std::exception&) {
                throw DomainError("bad index on line " + std::to_string(lineno) + " in " + path);
            }
            if (n < 0) throw DomainError("negative index in psi-sequence file");
            values[n] = parse_rational(vtok);
        }
        auto it = values.find(0);
        if (it == values.end() || it->second != 0)
            throw DomainError("psi-sequence file must define index 0 with value 0");
        return PsiSequence("file:" + path, [values = std::move(values), path](long n) {
            auto f = values.find(n);
            if (f == values.end())
                throw DomainError("psi-sequence file " + path + " is missing index " +
                                  std::to_string(n));
            return f->second;
        });
    }

    const std::string& name() const { return name_; }

    // psi_n; negative indices collapse to 0 (falling-factorial convention).
    Rational value(long n) const {
        if (n <= 0) {
            if (n == 0) check_zero();
            return Rational(0);
        }
        return gen_(n);
    }

private:
    PsiSequence(std::string name, std::function<Rational(long)> gen)
        : name_(std::move(name)), gen_(std::move(gen)) {}

    void check_zero() const {
        if (gen_(0) != 0) throw DomainError("psi-sequence must have psi_0 = 0");
    }

    std::string name_;
    std::function<Rational(long)> gen_;
};

// n_psi! = psi_n * (n-1)_psi!; empty product 1. Any vanishing factor makes
// the factorial (and everything downstream of it) meaningless, so it throws.
inline Rational psi_factorial(long n, const PsiSequence& psi) {
    if (n < 0) throw DomainError("psi_factorial needs n >= 0");
    Rational out(1);
    for (long j = 1; j <= n; ++j) {
        Rational v = psi.value(j);
        if (v == 0)
            throw SingularSequenceError("psi_" + std::to_string(j) + " = 0 in sequence " +
                                        psi.name());
        out *= v;
    }
    return out;
}

// psi_x psi_{x-1} ... psi_{x-k+1}; vanishes for k > x since psi_0 = 0.
inline Rational psi_falling_factorial(long x, long k, const PsiSequence& psi) {
    if (x < 0 || k < 0) throw DomainError("psi_falling_factorial needs x, k >= 0");
    Rational out(1);
    for (long j = 0; j < k; ++j) {
        Rational v = psi.value(x - j);
        if (v == 0) return Rational(0);
        out *= v;
    }
    return out;
}

// psi-Stirling numbers: the unique solution of
//   (psi_x)^n = sum_k S[n,k] psi_falling_factorial(x,k)
// imposed at the nodes x = 0..n. The node matrix is lower triangular with
// diagonal k_psi! != 0, so exact back-substitution solves it.
inline std::vector<Rational> psi_stirling_row(long n, const PsiSequence& psi) {
    if (n < 0) throw DomainError("psi_stirling needs n >= 0");
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
    for (long x = 0; x <= n; ++x) {
        Rational rhs = rat_pow(psi.value(x), static_cast<unsigned>(n));
        for (long k = 0; k < x; ++k)
            rhs -= row[static_cast<std::size_t>(k)] * psi_falling_factorial(x, k, psi);
        row[static_cast<std::size_t>(x)] = rhs / psi_factorial(x, psi);
    }
    return row;
}

inline std::vector<std::vector<Rational>> psi_stirling_table(long n_max, const PsiSequence& psi) {
    std::vector<std::vector<Rational>> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (long n = 0; n <= n_max; ++n) out.push_back(psi_stirling_row(n, psi));
    return out;
}

inline Rational psi_bell(long n, const PsiSequence& psi) {
    Rational out(0);
    for (const auto& s : psi_stirling_row(n, psi)) out += s;
    return out;
}

// Residuals of the defining relation at held-out nodes x = n+1 .. n+extra.
// Zero for sequences where the relation is a genuine identity (gauss,
// natural); reported, not asserted, for arbitrary psi.
inline std::vector<Rational> psi_defining_residuals(long n, const PsiSequence& psi,
                                                    long extra = 3) {
    std::vector<Rational> row = psi_stirling_row(n, psi);
    std::vector<Rational> out;
    for (long x = n + 1; x <= n + extra; ++x) {
        Rational rhs(0);
        for (long k = 0; k <= n; ++k)
            rhs += row[static_cast<std::size_t>(k)] * psi_falling_factorial(x, k, psi);
        out.push_back(rat_pow(psi.value(x), static_cast<unsigned>(n)) - rhs);
    }
    return out;
}

}  // namespace qcomb
