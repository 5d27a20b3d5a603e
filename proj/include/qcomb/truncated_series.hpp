#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcomb/errors.hpp"

namespace qcomb {

enum class Var { t, lambda };

inline const char* var_name(Var v) { return v == Var::t ? "t" : "lambda"; }

// Formal power series truncated at an explicit inclusive order K. The
// coefficient type is any exact ring scalar (Rational, QPoly,
// QRationalFunction). Operations never extend the order.
template <class Coeff>
class TruncatedSeries {
public:
    TruncatedSeries(Var var, std::size_t order)
        : var_(var), coeffs_(order + 1, Coeff(0)) {}
    TruncatedSeries(Var var, std::vector<Coeff> coeffs) : var_(var), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw DomainError("series needs at least the constant term");
    }

    Var variable() const { return var_; }
    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    const Coeff& coeff(std::size_t i) const { return coeffs_.at(i); }
    void set_coeff(std::size_t i, Coeff c) { coeffs_.at(i) = std::move(c); }

    TruncatedSeries truncate(std::size_t new_order) const {
        if (new_order >= order()) return *this;
        return TruncatedSeries(var_, std::vector<Coeff>(coeffs_.begin(),
                                                        coeffs_.begin() + new_order + 1));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_compatible(a, b);
        const std::size_t k = std::min(a.order(), b.order());
        TruncatedSeries out(a.var_, k);
        for (std::size_t i = 0; i <= k; ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_compatible(a, b);
        const std::size_t k = std::min(a.order(), b.order());
        TruncatedSeries out(a.var_, k);
        for (std::size_t i = 0; i <= k; ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return out;
    }

    // Cauchy product, truncated at min(orders).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_compatible(a, b);
        const std::size_t k = std::min(a.order(), b.order());
        TruncatedSeries out(a.var_, k);
        for (std::size_t n = 0; n <= k; ++n) {
            Coeff acc(0);
            for (std::size_t i = 0; i <= n; ++i) acc += a.coeffs_[i] * b.coeffs_[n - i];
            out.coeffs_[n] = std::move(acc);
        }
        return out;
    }

    TruncatedSeries operator*(const Coeff& s) const {
        TruncatedSeries out(*this);
        for (auto& c : out.coeffs_) c *= s;
        return out;
    }

private:
    static void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.var_ != b.var_)
            throw SeriesMismatchError(std::string("series variable mismatch: ") +
                                      var_name(a.var_) + " vs " + var_name(b.var_));
    }

    Var var_;
    std::vector<Coeff> coeffs_;
};

}  // namespace qcomb
