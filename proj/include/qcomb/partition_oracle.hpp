#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcomb/qpoly.hpp"

namespace qcomb {

// Set partition of {0, ..., n-1} in restricted-growth encoding: element i
// lives in block rg[i], a_0 = 0 and a_{i+1} <= 1 + max(a_0..a_i). Blocks are
// numbered by order of their minima.
struct SetPartition {
    std::vector<int> rg;

    explicit SetPartition(std::vector<int> rg_) : rg(std::move(rg_)) {
        if (!valid()) throw DomainError("not a restricted-growth string");
    }

    std::size_t size() const { return rg.size(); }

    int block_count() const {
        int m = -1;
        for (int a : rg) m = std::max(m, a);
        return m + 1;
    }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(block_count());
        for (std::size_t i = 0; i < rg.size(); ++i) out[rg[i]].push_back(static_cast<int>(i));
        return out;
    }

    static SetPartition from_blocks(const std::vector<std::vector<int>>& blocks, std::size_t n) {
        std::vector<int> rg(n, -1);
        // block index by minimum element
        std::vector<std::pair<int, std::size_t>> mins;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty()) throw DomainError("empty block");
            int mn = *std::min_element(blocks[b].begin(), blocks[b].end());
            mins.emplace_back(mn, b);
        }
        std::sort(mins.begin(), mins.end());
        for (std::size_t label = 0; label < mins.size(); ++label)
            for (int e : blocks[mins[label].second]) {
                if (e < 0 || static_cast<std::size_t>(e) >= n || rg[e] != -1)
                    throw DomainError("blocks do not partition the ground set");
                rg[static_cast<std::size_t>(e)] = static_cast<int>(label);
            }
        for (int a : rg)
            if (a == -1) throw DomainError("blocks do not cover the ground set");
        return SetPartition(std::move(rg));
    }

    std::string rg_string() const {
        std::string s;
        for (int a : rg) s += std::to_string(a);
        return s;
    }

    bool valid() const {
        if (rg.empty() || rg[0] != 0) return false;
        int mx = 0;
        for (std::size_t i = 1; i < rg.size(); ++i) {
            if (rg[i] < 0 || rg[i] > mx + 1) return false;
            mx = std::max(mx, rg[i]);
        }
        return true;
    }
};

// Sum of the elements of the block containing 0 (0 contributes nothing).
inline long cigl_stat(const SetPartition& p) {
    long s = 0;
    for (std::size_t i = 1; i < p.rg.size(); ++i)
        if (p.rg[i] == 0) s += static_cast<long>(i);
    return s;
}

// With blocks ordered by minima, counts pairs (e, B_j) with e in an earlier
// block and e > min(B_j). Label-shift invariant, so any contiguous ground set
// works.
inline long inv_stat(const SetPartition& p) {
    const int k = p.block_count();
    std::vector<std::size_t> first(static_cast<std::size_t>(k), 0);
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (std::size_t i = 0; i < p.rg.size(); ++i) {
        auto b = static_cast<std::size_t>(p.rg[i]);
        if (!seen[b]) { seen[b] = true; first[b] = i; }
    }
    long inv = 0;
    for (std::size_t e = 0; e < p.rg.size(); ++e)
        for (int j = p.rg[e] + 1; j < k; ++j)
            if (first[static_cast<std::size_t>(j)] < e) ++inv;
    return inv;
}

inline constexpr long kPartitionEnumerationCap = 13;

// Visits every restricted-growth string of length n in lexicographic order.
// Deterministic; ~27.6M partitions at the default cap of n = 13.
template <class Visitor>
void visit_partitions(long n, Visitor&& visit, long cap = kPartitionEnumerationCap) {
    if (n < 1) throw DomainError("partition enumeration needs n >= 1");
    if (n > cap)
        throw DomainError("partition enumeration refused: n = " + std::to_string(n) +
                          " exceeds cap " + std::to_string(cap) +
                          " (raise the cap explicitly to override)");
    const auto un = static_cast<std::size_t>(n);
    std::vector<int> a(un, 0);
    std::vector<int> b(un, 0);  // b[i] = 1 + max(a[0..i-1]); a[i] may range 0..b[i]
    for (std::size_t i = 1; i < un; ++i) b[i] = 1;
    while (true) {
        visit(a);
        // lexicographic successor: bump the rightmost position below its bound
        std::size_t pos = 0;
        for (std::size_t j = un; j-- > 1;)
            if (a[j] < b[j]) { pos = j; break; }
        if (pos == 0) return;
        ++a[pos];
        for (std::size_t j = pos + 1; j < un; ++j) {
            a[j] = 0;
            b[j] = std::max(b[j - 1], a[j - 1] + 1);
        }
    }
}

enum class PartitionStat { cigl, inv };

inline long eval_stat(const SetPartition& p, PartitionStat s) {
    return s == PartitionStat::cigl ? cigl_stat(p) : inv_stat(p);
}

// Materialized enumeration, optionally filtered to exactly k blocks.
inline std::vector<SetPartition> enumerate_partitions(long n, std::optional<long> k_filter = {},
                                                      long cap = kPartitionEnumerationCap) {
    std::vector<SetPartition> out;
    visit_partitions(n, [&](const std::vector<int>& rg) {
        SetPartition p(rg);
        if (!k_filter || p.block_count() == *k_filter) out.push_back(std::move(p));
    }, cap);
    return out;
}

// Sum of q^{stat(pi)} over the enumerated partitions; coefficient of q^v
// counts partitions with statistic value v.
inline QPoly weighted_sum(long n, std::optional<long> k_filter, PartitionStat stat,
                          long cap = kPartitionEnumerationCap) {
    std::vector<long> counts;
    visit_partitions(n, [&](const std::vector<int>& rg) {
        SetPartition p(rg);
        if (k_filter && p.block_count() != *k_filter) return;
        long v = eval_stat(p, stat);
        if (static_cast<std::size_t>(v) >= counts.size()) counts.resize(v + 1, 0);
        ++counts[static_cast<std::size_t>(v)];
    }, cap);
    std::vector<Rational> coeffs(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) coeffs[i] = Rational(counts[i]);
    return QPoly(std::move(coeffs));
}

// One pass over all partitions of an n-set, binned by block count k; entry k
// is the weighted sum over A_{n,k}. Index 0 is unused (zero polynomial).
inline std::vector<QPoly> weighted_sums_by_block_count(long n, PartitionStat stat,
                                                       long cap = kPartitionEnumerationCap) {
    std::vector<std::vector<long>> counts(static_cast<std::size_t>(n) + 1);
    visit_partitions(n, [&](const std::vector<int>& rg) {
        SetPartition p(rg);
        auto k = static_cast<std::size_t>(p.block_count());
        long v = eval_stat(p, stat);
        if (static_cast<std::size_t>(v) >= counts[k].size()) counts[k].resize(v + 1, 0);
        ++counts[k][static_cast<std::size_t>(v)];
    }, cap);
    std::vector<QPoly> out(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) {
        std::vector<Rational> coeffs(counts[k].size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = Rational(counts[k][i]);
        out[k] = QPoly(std::move(coeffs));
    }
    return out;
}

// Classical Stirling triangle S2(m, k) for m <= n_max, counted by brute-force
// enumeration. This is ground truth, not a recurrence.
inline std::vector<std::vector<long>> oracle_stirling_triangle(long n_max,
                                                               long cap = kPartitionEnumerationCap) {
    std::vector<std::vector<long>> tri(static_cast<std::size_t>(n_max) + 1);
    tri[0] = {1};
    for (long m = 1; m <= n_max; ++m) {
        auto& row = tri[static_cast<std::size_t>(m)];
        row.assign(static_cast<std::size_t>(m) + 1, 0);
        visit_partitions(m, [&](const std::vector<int>& rg) {
            int mx = 0;
            for (int a : rg) mx = std::max(mx, a);
            ++row[static_cast<std::size_t>(mx) + 1];
        }, cap);
    }
    return tri;
}

inline long oracle_bell(long n, long cap = kPartitionEnumerationCap) {
    if (n == 0) return 1;
    long count = 0;
    visit_partitions(n, [&](const std::vector<int>&) { ++count; }, cap);
    return count;
}

}  // namespace qcomb
