#include <catch2/catch_amalgamated.hpp>

#include "qcomb/carlitz.hpp"
#include "qcomb/partition_oracle.hpp"

using namespace qcomb;

namespace {
QPoly P(std::vector<int> coeffs) {
    std::vector<Rational> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = Rational(coeffs[i]);
    return QPoly(std::move(c));
}

Rational bell_lambda_eval(long n, const Rational& q, const Rational& lambda) {
    QBellValue b = q_bell(n);
    Rational out(0), lp(1);
    for (const auto& coeff : b.lambda_coeffs) {
        out += coeff.eval(q) * lp;
        lp *= lambda;
    }
    return out;
}
}  // namespace

TEST_CASE("carlitz_stirling base values") {
    CHECK(carlitz_stirling(2, 2) == P({0, 1}));       // q
    CHECK(carlitz_stirling(3, 2) == P({0, 2, 1}));    // 2q + q^2
    CHECK(carlitz_stirling(4, 2).eval(Rational(1)) == 7);
    CHECK(carlitz_stirling(0, 0) == P({1}));
    CHECK_THROWS_AS(carlitz_stirling(3, 4), DomainError);
    CHECK_THROWS_AS(carlitz_stirling(3, -1), DomainError);
}

TEST_CASE("recurrence agrees with the defining-relation solver") {
    // the recurrence is only trusted because this solve confirms it
    QStirlingTable rec(8, QStirlingTable::Method::recurrence);
    QStirlingTable solved(8, QStirlingTable::Method::defining_relation);
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) CHECK(rec.entry(n, k) == solved.entry(n, k));
}

TEST_CASE("row boundary identities") {
    for (long n = 1; n <= 12; ++n) {
        CHECK(QStirlingTable(n).entry(n, 1) == P({1}));
        CHECK(QStirlingTable(n).entry(n, n) ==
              QPoly::monomial(Rational(1), static_cast<std::size_t>(n * (n - 1) / 2)));
    }
}

TEST_CASE("entries have nonnegative integer coefficients") {
    QStirlingTable table(10);
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k)
            for (const auto& c : table.entry(n, k).coeffs()) {
                CHECK(c >= 0);
                CHECK(denominator(c) == 1);
            }
}

TEST_CASE("q=1 limit is the classical Stirling triangle") {
    auto tri = oracle_stirling_triangle(8);
    QStirlingTable table(8);
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(table.entry(n, k).eval(Rational(1)) ==
                  tri[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
}

TEST_CASE("verify_defining_relation") {
    CHECK(verify_defining_relation(2, 5).pass);
    CHECK(verify_defining_relation(0, 3).pass);
    CHECK(verify_defining_relation(6, 9).pass);
    CHECK_THROWS_AS(verify_defining_relation(5, 3), DomainError);

    SECTION("fault injection: corrupted entry is caught") {
        QStirlingTable table(4);
        table.set_entry(2, 2, P({1}));
        auto report = verify_defining_relation(table, 2, 5);
        CHECK_FALSE(report.pass);
        CHECK_THAT(report.detail, Catch::Matchers::ContainsSubstring("x=2"));
    }
}

TEST_CASE("q_bell") {
    CHECK(q_bell(0).poly == P({1}));
    CHECK(q_bell(3).poly == P({1, 2, 1, 1}));
    CHECK(q_bell(5).poly.eval(Rational(1)) == 52);
    QBellValue b = q_bell(4);
    QPoly sum;
    for (const auto& c : b.lambda_coeffs) sum += c;
    CHECK(sum == b.poly);
}

TEST_CASE("dobinski_formal_verify") {
    CHECK(dobinski_formal_verify(1, 6).pass);
    CHECK(dobinski_formal_verify(3, 12).pass);
    CHECK(dobinski_formal_verify(0, 4).pass);
    CHECK_THROWS_AS(dobinski_formal_verify(5, 3), DomainError);

    SECTION("fault injection: perturbed Bell coefficient is caught") {
        auto coeffs = q_bell(3).lambda_coeffs;
        coeffs[2] += P({1});
        auto report = dobinski_formal_verify(3, 8, coeffs);
        CHECK_FALSE(report.pass);
    }
}

TEST_CASE("dobinski_numeric basics") {
    Rational eps(1, Integer("1000000000000"));
    auto v = dobinski_numeric(3, Rational(1, 2), Rational(1), eps);
    CHECK(v.contains(Rational(19, 8)));
    CHECK(v.half_width() <= eps);

    auto one = dobinski_numeric(0, Rational(2), Rational(3), eps);
    CHECK(one.contains(Rational(1)));

    auto classical = dobinski_numeric(3, Rational(1), Rational(1), eps);
    CHECK(classical.contains(Rational(5)));  // B_3 = 5

    CHECK_THROWS_AS(dobinski_numeric(3, Rational(0), Rational(1), eps), DomainError);
    CHECK_THROWS_AS(dobinski_numeric(3, Rational(1, 2), Rational(-1), eps), DomainError);
    CHECK_THROWS_AS(dobinski_numeric(3, Rational(1, 2), Rational(1), Rational(0)), DomainError);
}

TEST_CASE("dobinski_numeric interval contains the exact polynomial value") {
    Rational eps(1, Integer("1000000000000"));
    for (Rational q : {Rational(1, 2), Rational(9, 10), Rational(2), Rational(10)})
        for (Rational lambda : {Rational(1, 2), Rational(1)})
            for (long n = 0; n <= 5; ++n) {
                auto v = dobinski_numeric(n, q, lambda, eps);
                CHECK(v.contains(bell_lambda_eval(n, q, lambda)));
                CHECK(v.half_width() <= eps);
            }
}

TEST_CASE("dobinski_numeric refuses divergent parameters") {
    Rational eps(1, 1000000);
    // exp_q radius is 1/(1-q): these sit outside it
    CHECK_THROWS_AS(dobinski_numeric(3, Rational(1, 2), Rational(2), eps), ConvergenceError);
    CHECK_THROWS_AS(dobinski_numeric(3, Rational(1, 10), Rational(2), eps), ConvergenceError);
}
