#include <catch2/catch_amalgamated.hpp>

#include "qcomb/qpoisson.hpp"

using namespace qcomb;

namespace {
const Rational kEps(1, Integer("1000000000000"));

Rational bell_eval(long n, const Rational& q) { return q_bell(n).poly.eval(q); }
}  // namespace

TEST_CASE("params validation") {
    CHECK_THROWS_AS(QPoissonParams(Rational(0), Rational(1)), DomainError);
    CHECK_THROWS_AS(QPoissonParams(Rational(1), Rational(-2)), DomainError);
    CHECK_THROWS_AS(QPoissonParams(Rational(1), Rational(1), Rational(0)), DomainError);
}

TEST_CASE("pmf") {
    QPoissonParams classical(Rational(1), Rational(1), kEps);
    auto p0 = pmf(0, classical);
    // 1/e to 18 digits
    Rational inv_e(Integer("367879441171442321"), Integer("1000000000000000000"));
    CHECK(p0.lo <= inv_e + kEps);
    CHECK(p0.hi >= inv_e - kEps);
    CHECK(p0.half_width() <= kEps);

    SECTION("p_1 = p_0 at lambda = 1 since 1_q! = 1") {
        QPoissonParams params(Rational(1), Rational(2, 3), kEps);
        auto a = pmf(0, params);
        auto b = pmf(1, params);
        CHECK(a.lo == b.lo);
        CHECK(a.hi == b.hi);
    }

    SECTION("partial pmf sums approach total mass 1") {
        QPoissonParams params(Rational(1), Rational(1, 2), kEps);
        Rational sum_lo(0), sum_hi(0);
        for (long k = 0; k <= 60; ++k) {
            auto p = pmf(k, params);
            sum_lo += p.lo;
            sum_hi += p.hi;
        }
        CHECK(sum_lo <= 1);
        CHECK(sum_hi >= Rational(1) - Rational(1, 1000000000));
    }

    CHECK_THROWS_AS(pmf(-1, classical), DomainError);
}

TEST_CASE("moments realize the q-Bell numbers") {
    QPoissonParams half(Rational(1), Rational(1, 2), kEps);
    CHECK(moment(0, half).contains(Rational(1)));
    CHECK(moment(3, half).contains(Rational(19, 8)));

    QPoissonParams classical(Rational(1), Rational(1), kEps);
    CHECK(moment(2, classical).contains(Rational(2)));

    for (Rational q : {Rational(1, 10), Rational(1, 2), Rational(9, 10), Rational(2)})
        for (long n = 0; n <= 6; ++n) {
            QPoissonParams params(Rational(1), q, kEps);
            CHECK(moment(n, params).contains(bell_eval(n, q)));
        }
}

TEST_CASE("factorial moments equal lambda^m") {
    QPoissonParams params(Rational(1), Rational(1, 2), kEps);
    CHECK(factorial_moment(2, params).contains(Rational(1)));
    CHECK(factorial_moment(0, params).contains(Rational(1)));

    QPoissonParams two(Rational(2), Rational(2, 3), kEps);
    CHECK(factorial_moment(1, two).contains(Rational(2)));
    // lambda = 2 at q = 1/2 sits exactly on the exp_q convergence boundary
    QPoissonParams boundary(Rational(2), Rational(1, 2), kEps);
    CHECK_THROWS_AS(factorial_moment(1, boundary), ConvergenceError);

    for (Rational q : {Rational(1, 2), Rational(9, 10), Rational(2)})
        for (Rational lambda : {Rational(1, 2), Rational(1)})
            for (long m = 0; m <= 6; ++m) {
                QPoissonParams p(lambda, q, kEps);
                CHECK(factorial_moment(m, p).contains(rat_pow(lambda, static_cast<unsigned>(m))));
            }
}

TEST_CASE("divergent parameters raise convergence errors") {
    QPoissonParams bad(Rational(2), Rational(1, 2), kEps);
    CHECK_THROWS_AS(pmf(0, bad), ConvergenceError);
    CHECK_THROWS_AS(moment(2, bad), ConvergenceError);
    CHECK_THROWS_AS(factorial_moment(1, bad), ConvergenceError);
}

TEST_CASE("pgf_unnormalized coefficients") {
    auto classical = pgf_unnormalized(QPoissonParams(Rational(1), Rational(1)), 2);
    CHECK(classical.variable() == Var::t);
    CHECK(classical.coeff(0) == 1);
    CHECK(classical.coeff(1) == 1);
    CHECK(classical.coeff(2) == Rational(1, 2));

    auto half = pgf_unnormalized(QPoissonParams(Rational(1), Rational(1, 2)), 2);
    CHECK(half.coeff(2) == Rational(2, 3));

    CHECK(pgf_unnormalized(QPoissonParams(Rational(1), Rational(3)), 0).order() == 0u);
}

TEST_CASE("verify_eq8") {
    CHECK(verify_eq8(QPoissonParams(Rational(1), Rational(1, 2)), 10).pass);
    CHECK(verify_eq8(QPoissonParams(Rational(1), Rational(1)), 10).pass);
    CHECK(verify_eq8(QPoissonParams(Rational(3, 2), Rational(2)), 12).pass);
    CHECK_THROWS_AS(verify_eq8(QPoissonParams(Rational(1), Rational(1)), 1), DomainError);

    SECTION("fault injection: perturbed coefficient fails the mean identity") {
        QPoissonParams params(Rational(1), Rational(1, 2));
        auto g = pgf_unnormalized(params, 10);
        g.set_coeff(3, g.coeff(3) + Rational(1, 100));
        auto report = verify_eq8(params, 10, g);
        CHECK_FALSE(report.pass);
        CHECK_THAT(report.detail, Catch::Matchers::ContainsSubstring("n=3"));
    }
}
