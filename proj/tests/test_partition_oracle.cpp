#include <catch2/catch_amalgamated.hpp>

#include "qcomb/partition_oracle.hpp"

using namespace qcomb;

namespace {
QPoly P(std::vector<int> coeffs) {
    std::vector<Rational> c(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = Rational(coeffs[i]);
    return QPoly(std::move(c));
}

// Independent Bell numbers via the Bell triangle, for count cross-checks.
long bell_triangle(long n) {
    std::vector<long> row{1};
    for (long i = 0; i < n; ++i) {
        std::vector<long> next{row.back()};
        for (long v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}
}  // namespace

TEST_CASE("enumeration basics") {
    CHECK(enumerate_partitions(1).size() == 1u);

    auto parts = enumerate_partitions(3);
    REQUIRE(parts.size() == 5u);
    std::vector<std::string> rgs;
    for (const auto& p : parts) rgs.push_back(p.rg_string());
    CHECK(rgs == std::vector<std::string>{"000", "001", "010", "011", "012"});

    CHECK(enumerate_partitions(4, 2).size() == 7u);
}

TEST_CASE("enumeration counts match Bell numbers") {
    for (long n = 1; n <= 10; ++n) {
        CHECK(oracle_bell(n) == bell_triangle(n));
        CHECK(weighted_sum(n, {}, PartitionStat::cigl).eval(Rational(1)) == bell_triangle(n));
    }
}

TEST_CASE("enumeration is deterministic") {
    std::vector<std::string> first, second;
    visit_partitions(6, [&](const std::vector<int>& rg) {
        first.push_back(SetPartition(rg).rg_string());
    });
    visit_partitions(6, [&](const std::vector<int>& rg) {
        second.push_back(SetPartition(rg).rg_string());
    });
    CHECK(first == second);
    CHECK(std::is_sorted(first.begin(), first.end()));
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_partitions(14), DomainError);
    CHECK_THROWS_AS(enumerate_partitions(6, {}, 5), DomainError);
    CHECK_THROWS_WITH(enumerate_partitions(14), Catch::Matchers::ContainsSubstring("cap"));
    // explicit override raises the cap
    CHECK(enumerate_partitions(6, {}, 14).size() == 203u);
    CHECK_THROWS_AS(enumerate_partitions(0), DomainError);
}

TEST_CASE("rg round trip through blocks") {
    for (long n = 1; n <= 7; ++n)
        visit_partitions(n, [&](const std::vector<int>& rg) {
            SetPartition p(rg);
            SetPartition back = SetPartition::from_blocks(p.blocks(), p.size());
            CHECK(back.rg == p.rg);
            CHECK(p.block_count() == static_cast<int>(p.blocks().size()));
        });
}

TEST_CASE("invalid rg strings rejected") {
    CHECK_THROWS_AS(SetPartition({1, 0}), DomainError);
    CHECK_THROWS_AS(SetPartition({0, 2}), DomainError);
    CHECK_THROWS_AS(SetPartition(std::vector<int>{}), DomainError);
    CHECK_THROWS_AS(SetPartition::from_blocks({{0, 1}, {1, 2}}, 3), DomainError);
    CHECK_THROWS_AS(SetPartition::from_blocks({{0}}, 2), DomainError);
}

TEST_CASE("cigl statistic") {
    CHECK(cigl_stat(SetPartition::from_blocks({{0, 1}, {2}}, 3)) == 1);
    CHECK(cigl_stat(SetPartition({0, 1, 2})) == 0);
    CHECK(cigl_stat(SetPartition({0, 0, 0})) == 3);
}

TEST_CASE("inv statistic") {
    // {{1,3},{2}} shifted to {0,...}: blocks {0,2} and {1}; the pair is
    // (2, {1}) since 2 sits in the earlier block and exceeds min {1}
    CHECK(inv_stat(SetPartition::from_blocks({{0, 2}, {1}}, 3)) == 1);
    CHECK(inv_stat(SetPartition({0, 0, 0, 0})) == 0);
    CHECK(inv_stat(SetPartition({0, 1, 2})) == 0);
}

TEST_CASE("weighted sums") {
    CHECK(weighted_sum(3, {}, PartitionStat::cigl) == P({2, 1, 1, 1}));
    CHECK(weighted_sum(2, {}, PartitionStat::cigl) == P({1, 1}));
    CHECK(weighted_sum(3, 2, PartitionStat::inv) == P({2, 1}));
}

TEST_CASE("weighted_sums_by_block_count agrees with filtered sums") {
    for (long n = 1; n <= 7; ++n) {
        auto bins = weighted_sums_by_block_count(n, PartitionStat::cigl);
        for (long k = 1; k <= n; ++k)
            CHECK(bins[static_cast<std::size_t>(k)] == weighted_sum(n, k, PartitionStat::cigl));
    }
}

TEST_CASE("oracle stirling triangle row sums") {
    auto tri = oracle_stirling_triangle(8);
    for (long n = 1; n <= 8; ++n) {
        long sum = 0;
        for (long v : tri[static_cast<std::size_t>(n)]) sum += v;
        CHECK(sum == bell_triangle(n));
        CHECK(tri[static_cast<std::size_t>(n)][0] == 0);
        CHECK(tri[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)] == 1);
    }
}
