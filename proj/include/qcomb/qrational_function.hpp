#pragma once

#include <string>
#include <utility>

#include "qcomb/qpoly.hpp"

namespace qcomb {

// Reduced quotient of two QPoly: gcd(num, den) = 1 over the rationals, den
// nonzero with positive leading coefficient.
class QRationalFunction {
public:
    QRationalFunction() : num_(0), den_(1) {}
    QRationalFunction(int c) : num_(c), den_(1) {}
    QRationalFunction(const Rational& c) : num_(c), den_(1) {}
    QRationalFunction(const QPoly& p) : num_(p), den_(1) {}
    QRationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        reduce();
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == QPoly(1); }

    friend bool operator==(const QRationalFunction& a, const QRationalFunction& b) {
        // cross-multiplication: both sides are reduced, but this stays cheap
        // and correct even for structurally different normal forms
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const QRationalFunction& a, const QRationalFunction& b) {
        return !(a == b);
    }

    friend QRationalFunction operator+(const QRationalFunction& a, const QRationalFunction& b) {
        // mpq-style: factor out gcd of denominators before the cross sum
        QPoly g = poly_gcd(a.den_, b.den_);
        QPoly da = a.den_.div_exact(g);
        QPoly db = b.den_.div_exact(g);
        return QRationalFunction(a.num_ * db + b.num_ * da, da * b.den_);
    }

    friend QRationalFunction operator-(const QRationalFunction& a, const QRationalFunction& b) {
        return a + (-b);
    }

    QRationalFunction operator-() const {
        QRationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend QRationalFunction operator*(const QRationalFunction& a, const QRationalFunction& b) {
        QPoly g1 = poly_gcd(a.num_, b.den_);
        QPoly g2 = poly_gcd(b.num_, a.den_);
        QRationalFunction r;
        r.num_ = a.num_.div_exact(g1) * b.num_.div_exact(g2);
        r.den_ = a.den_.div_exact(g2) * b.den_.div_exact(g1);
        r.normalize_sign();
        return r;
    }

    friend QRationalFunction operator/(const QRationalFunction& a, const QRationalFunction& b) {
        if (b.is_zero()) throw DomainError("division by zero rational function");
        QRationalFunction inv;
        inv.num_ = b.den_;
        inv.den_ = b.num_;
        inv.normalize_sign();
        return a * inv;
    }

    QRationalFunction& operator+=(const QRationalFunction& o) { *this = *this + o; return *this; }
    QRationalFunction& operator*=(const QRationalFunction& o) { *this = *this * o; return *this; }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw DomainError("rational function pole at evaluation point");
        return num_.eval(x) / d;
    }

    // Re-runs the canonicalization; a no-op on an already reduced value.
    void reduce() {
        QPoly g = poly_gcd(num_, den_);
        if (!g.is_zero() && g != QPoly(1)) {
            num_ = num_.div_exact(g);
            den_ = den_.div_exact(g);
        }
        normalize_sign();
    }

    std::string to_string(const std::string& var = "q") const {
        if (is_polynomial()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
    }

private:
    // Canonical denominator: primitive integer coefficients, positive leading
    // coefficient; any rational scale moves into the numerator.
    void normalize_sign() {
        QPoly pd = primitive_part(den_);
        Rational scale = den_.leading_coeff() / pd.leading_coeff();
        if (scale != 1) num_ = num_ * (Rational(1) / scale);
        den_ = std::move(pd);
    }

    QPoly num_;
    QPoly den_;
};

}  // namespace qcomb
