#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcomb/rational.hpp"

namespace qcomb {

// Dense univariate polynomial in q over Rational, always in canonical form:
// trailing zero coefficients trimmed, so the zero polynomial has an empty
// coefficient vector and degree() == nullopt.
class QPoly {
public:
    QPoly() = default;
    QPoly(int c) { if (c != 0) coeffs_.push_back(Rational(c)); }
    QPoly(const Rational& c) { if (c != 0) coeffs_.push_back(c); }
    explicit QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly monomial(const Rational& c, std::size_t power) {
        if (c == 0) return QPoly();
        std::vector<Rational> v(power + 1);
        v[power] = c;
        return QPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is "minus infinity", reported as nullopt.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    Rational leading_coeff() const {
        return coeffs_.empty() ? Rational(0) : coeffs_.back();
    }

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
        return QPoly(std::move(out));
    }

    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
        return QPoly(std::move(out));
    }

    QPoly operator-() const {
        std::vector<Rational> out(coeffs_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = -coeffs_[i];
        return QPoly(std::move(out));
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return QPoly();
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return QPoly(std::move(out));
    }

    friend QPoly operator*(const QPoly& a, const Rational& s) {
        if (s == 0) return QPoly();
        std::vector<Rational> out(a.coeffs_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs_[i] * s;
        return QPoly(std::move(out));
    }
    friend QPoly operator*(const Rational& s, const QPoly& a) { return a * s; }

    QPoly& operator+=(const QPoly& o) { *this = *this + o; return *this; }
    QPoly& operator-=(const QPoly& o) { *this = *this - o; return *this; }
    QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }

    QPoly pow(unsigned e) const {
        QPoly result(1), base(*this);
        while (e) {
            if (e & 1u) result *= base;
            base *= base;
            e >>= 1u;
        }
        return result;
    }

    // Horner evaluation.
    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Euclidean division over the rationals; den must be nonzero.
    static std::pair<QPoly, QPoly> divmod(const QPoly& num, const QPoly& den) {
        if (den.is_zero()) throw DomainError("polynomial division by zero");
        if (num.coeffs_.size() < den.coeffs_.size()) return {QPoly(), num};
        std::vector<Rational> rem = num.coeffs_;
        const std::size_t dd = den.coeffs_.size() - 1;
        const Rational& lead = den.coeffs_.back();
        std::vector<Rational> quot(rem.size() - dd, Rational(0));
        for (std::size_t i = rem.size(); i-- > dd;) {
            if (rem[i] == 0) continue;
            Rational f = rem[i] / lead;
            quot[i - dd] = f;
            for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.coeffs_[j];
        }
        return {QPoly(std::move(quot)), QPoly(std::move(rem))};
    }

    // Exact division; throws if den does not divide this.
    QPoly div_exact(const QPoly& den) const {
        auto [q, r] = divmod(*this, den);
        if (!r.is_zero()) throw DomainError("inexact polynomial division");
        return q;
    }

    bool divisible_by(const QPoly& den) const {
        return divmod(*this, den).second.is_zero();
    }

    std::string to_string(const std::string& var = "q") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// Canonical rendering in ascending powers: "1 + 2*q + q^2".
inline std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string term;
        if (i == 0) {
            term = qcomb::to_string(mag);
        } else {
            if (mag != 1) term = qcomb::to_string(mag) + "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        out += term;
    }
    return out;
}

namespace detail {

// Integer-coefficient view used by content/gcd machinery.
inline Integer coeff_lcm_den(const QPoly& p) {
    Integer l(1);
    for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, denominator(c));
    return l;
}

inline std::vector<Integer> to_integer_coeffs(const QPoly& p, const Integer& scale) {
    std::vector<Integer> out(p.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rational s = p.coeffs()[i] * Rational(scale);
        out[i] = numerator(s);  // exact by construction of scale
    }
    return out;
}

inline Integer int_content(const std::vector<Integer>& v) {
    Integer g(0);
    for (const auto& c : v) g = boost::multiprecision::gcd(g, c);
    return g;
}

// Subresultant polynomial remainder sequence over the integers. Keeps
// coefficient growth polynomial where naive rational Euclid explodes.
inline std::vector<Integer> subresultant_prs_gcd(std::vector<Integer> a, std::vector<Integer> b) {
    auto deg = [](const std::vector<Integer>& v) { return v.size() - 1; };
    auto trimv = [](std::vector<Integer>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    if (a.size() < b.size()) std::swap(a, b);
    Integer g(1), h(1);
    while (true) {
        const std::size_t d = deg(a) - deg(b);
        // pseudo-remainder of lc(b)^(d+1) * a by b
        std::vector<Integer> rem = a;
        Integer lb = b.back();
        Integer mult = int_pow(lb, static_cast<unsigned>(d + 1));
        for (auto& c : rem) c *= mult;
        for (std::size_t i = rem.size(); i-- > deg(b);) {
            if (rem[i] == 0) continue;
            Integer f = rem[i] / lb;  // exact for pseudo-remainder
            for (std::size_t j = 0; j < b.size(); ++j) rem[i - deg(b) + j] -= f * b[j];
        }
        trimv(rem);
        if (rem.empty()) break;
        if (rem.size() == 1) { b = {Integer(1)}; break; }
        Integer divisor = g * int_pow(h, static_cast<unsigned>(d));
        for (auto& c : rem) c /= divisor;  // exact per subresultant theory
        a = std::move(b);
        b = std::move(rem);
        g = a.back();
        Integer hp = int_pow(g, static_cast<unsigned>(d));
        h = d == 0 ? h : (d == 1 ? hp : hp / int_pow(h, static_cast<unsigned>(d - 1)));
    }
    Integer c = int_content(b);
    if (c != 0 && c != 1)
        for (auto& x : b) x /= c;
    if (!b.empty() && b.back() < 0)
        for (auto& x : b) x = -x;
    return b;
}

}  // namespace detail

// Primitive part: integer coefficients, content 1, positive leading
// coefficient. primitive_part(0) = 0.
inline QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    auto v = detail::to_integer_coeffs(p, detail::coeff_lcm_den(p));
    Integer c = detail::int_content(v);
    if (v.back() < 0) c = -c;
    std::vector<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i] / c);
    return QPoly(std::move(out));
}

// gcd over Q[q], normalized to the primitive integer polynomial with positive
// leading coefficient. gcd(0,0) = 0.
inline QPoly poly_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    // Fast path: in this library one argument usually divides the other
    // (q-factorials nest), so probe exact division before the PRS.
    if (a.coeffs().size() >= b.coeffs().size() && a.divisible_by(b)) return primitive_part(b);
    if (b.coeffs().size() > a.coeffs().size() && b.divisible_by(a)) return primitive_part(a);
    auto va = detail::to_integer_coeffs(a, detail::coeff_lcm_den(a));
    auto vb = detail::to_integer_coeffs(b, detail::coeff_lcm_den(b));
    auto vg = detail::subresultant_prs_gcd(std::move(va), std::move(vb));
    std::vector<Rational> out(vg.size());
    for (std::size_t i = 0; i < vg.size(); ++i) out[i] = Rational(vg[i]);
    return QPoly(std::move(out));
}

}  // namespace qcomb
