#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcomb/carlitz.hpp"
#include "qcomb/partition_oracle.hpp"

namespace qcomb {

// Calibration of the adopted inv statistic against the Carlitz numbers. The
// inversion statistic is only cited, not defined, so instead of trusting a
// normalization we measure it: for every 1 <= k <= n <= n_max the ratio
// carlitz_stirling(n,k) / sum_{pi in A_{n,k}} q^{inv(pi)} must be a single
// monomial q^{e(k)} with e(k) independent of n. A non-monomial ratio or an
// n-dependent exponent fails the calibration.
struct InvCalibrationReport {
    bool pass = true;
    std::string detail;
    std::vector<long> exponent_by_k;  // index k, entry e(k); index 0 unused

    explicit operator bool() const { return pass; }
};

inline InvCalibrationReport inv_calibration(
    long n_max,
    std::optional<std::vector<std::vector<QPoly>>> weighted_override = {}) {
    if (n_max < 1) throw DomainError("inv_calibration needs n_max >= 1");
    InvCalibrationReport report;
    report.exponent_by_k.assign(static_cast<std::size_t>(n_max) + 1, -1);
    QStirlingTable table(n_max);
    for (long n = 1; n <= n_max; ++n) {
        std::vector<QPoly> sums =
            weighted_override ? (*weighted_override)[static_cast<std::size_t>(n)]
                              : weighted_sums_by_block_count(n, PartitionStat::inv);
        for (long k = 1; k <= n; ++k) {
            const QPoly& w = sums[static_cast<std::size_t>(k)];
            const QPoly& c = table.entry(n, k);
            auto [quot, rem] = QPoly::divmod(c, w);
            bool monomial = rem.is_zero();
            long e = -1;
            if (monomial) {
                const auto& qc = quot.coeffs();
                for (std::size_t i = 0; i + 1 < qc.size(); ++i)
                    if (qc[i] != 0) monomial = false;
                if (quot.is_zero() || quot.leading_coeff() != 1) monomial = false;
                if (monomial) e = static_cast<long>(qc.size()) - 1;
            }
            if (!monomial) {
                report.pass = false;
                report.detail = "ratio at (n,k)=(" + std::to_string(n) + "," +
                                std::to_string(k) + ") is not a monomial";
                return report;
            }
            long& stored = report.exponent_by_k[static_cast<std::size_t>(k)];
            if (stored == -1) {
                stored = e;
            } else if (stored != e) {
                report.pass = false;
                report.detail = "exponent for k=" + std::to_string(k) +
                                " depends on n: " + std::to_string(stored) + " vs " +
                                std::to_string(e) + " at n=" + std::to_string(n);
                return report;
            }
        }
    }
    std::string tbl;
    for (long k = 1; k <= n_max; ++k) {
        if (k > 1) tbl += " ";
        tbl += "e(" + std::to_string(k) +
               ")=" + std::to_string(report.exponent_by_k[static_cast<std::size_t>(k)]);
    }
    report.detail = "monomial ratios with " + tbl;
    return report;
}

}  // namespace qcomb
